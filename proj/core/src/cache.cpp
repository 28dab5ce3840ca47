#include "petcoh/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace petcoh {

std::string content_hash(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  return std::filesystem::current_path() / ".petcoh-cache";
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path DiskCache::file_for(std::string_view kind, std::string_view key) const {
  return dir_ / (std::string(kind) + "-" + std::string(key) + ".json");
}

std::optional<nlohmann::json> DiskCache::load(std::string_view kind, std::string_view key) const {
  std::ifstream in(file_for(kind, key));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.value("key", std::string()) != key) return std::nullopt;
    return j.at("value");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void DiskCache::store(std::string_view kind, std::string_view key, const nlohmann::json& value) {
  std::lock_guard lock(write_mutex_);
  std::filesystem::create_directories(dir_);
  const auto target = file_for(kind, key);
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  auto tmp = target;
  tmp += ".tmp." + tid.str();
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << nlohmann::json{{"key", key}, {"value", value}}.dump();
  }
  std::filesystem::rename(tmp, target);
}

ZQuotientStructure smith_normal_form_cached(const ZMatrix& a, DiskCache* cache) {
  if (!cache) return smith_normal_form(a);
  const std::string key = content_hash(a.to_json().dump());
  if (auto hit = cache->load("snf", key)) return ZQuotientStructure::from_json(*hit);
  auto s = smith_normal_form(a);
  cache->store("snf", key, s.to_json());
  return s;
}

}  // namespace petcoh
