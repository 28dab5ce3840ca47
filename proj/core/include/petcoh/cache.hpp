#pragma once

// On-disk JSON cache for expensive Smith-normal-form results.

#include "petcoh/zlinalg.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace petcoh {

/// Lowercase hex SHA-256 of the given bytes.
std::string content_hash(std::string_view bytes);

/// Environment variable that overrides the default cache location.
inline constexpr const char* kCacheDirEnv = "PETCOH_CACHE_DIR";

/// `$PETCOH_CACHE_DIR` if set, else `.petcoh-cache` under the working directory.
std::filesystem::path default_cache_dir();

/// Files are named `<kind>-<key>.json`; writes go through a temporary file and
/// an atomic rename, so concurrent writers of one key never expose partial data.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<nlohmann::json> load(std::string_view kind, std::string_view key) const;
  void store(std::string_view kind, std::string_view key, const nlohmann::json& value);

 private:
  std::filesystem::path file_for(std::string_view kind, std::string_view key) const;

  std::filesystem::path dir_;
  std::mutex write_mutex_;
};

/// smith_normal_form with full transforms, memoized under the hash of A.
/// A null cache computes directly.
ZQuotientStructure smith_normal_form_cached(const ZMatrix& a, DiskCache* cache);

}  // namespace petcoh
