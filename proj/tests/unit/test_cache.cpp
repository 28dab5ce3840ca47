#include "petcoh/cache.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>

using namespace petcoh;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(ContentHash, KnownVectors) {
  EXPECT_EQ(content_hash(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(content_hash("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(DiskCache, StoreAndLoad) {
  const auto dir = fresh_dir("petcoh-test-cache-basic");
  DiskCache cache(dir);
  EXPECT_FALSE(cache.load("k", "a").has_value());
  cache.store("k", "a", nlohmann::json{{"x", "1"}});
  const auto hit = cache.load("k", "a");
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ((*hit)["x"], "1");
  EXPECT_FALSE(cache.load("other", "a").has_value());
  std::filesystem::remove_all(dir);
}

TEST(DiskCache, CorruptEntriesAreIgnored) {
  const auto dir = fresh_dir("petcoh-test-cache-corrupt");
  DiskCache cache(dir);
  cache.store("k", "b", nlohmann::json::array({1, 2}));
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(e.path(), std::ios::trunc);
    out << "{\"key\": \"b\", \"val";
  }
  EXPECT_FALSE(cache.load("k", "b").has_value());
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(e.path(), std::ios::trunc);
    out << R"({"key": "not-b", "value": 3})";
  }
  EXPECT_FALSE(cache.load("k", "b").has_value());
  std::filesystem::remove_all(dir);
}

TEST(DiskCache, EnvironmentOverride) {
  ::setenv(kCacheDirEnv, "/tmp/petcoh-env-cache", 1);
  EXPECT_EQ(default_cache_dir(), std::filesystem::path("/tmp/petcoh-env-cache"));
  ::unsetenv(kCacheDirEnv);
  EXPECT_EQ(default_cache_dir(), std::filesystem::current_path() / ".petcoh-cache");
}

TEST(DiskCache, CachedSmithFormMatchesDirect) {
  const auto dir = fresh_dir("petcoh-test-cache-snf");
  DiskCache cache(dir);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    const ZMatrix a = oracle::random_matrix(rng, 4, 5, -9, 9);
    const auto direct = smith_normal_form(a);
    const auto cold = smith_normal_form_cached(a, &cache);
    const auto warm = smith_normal_form_cached(a, &cache);
    EXPECT_EQ(cold.to_json(), direct.to_json());
    EXPECT_EQ(warm.to_json(), direct.to_json());
    EXPECT_EQ(smith_normal_form_cached(a, nullptr).to_json(), direct.to_json());
  }
  std::filesystem::remove_all(dir);
}
