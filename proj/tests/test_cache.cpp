#include <gtest/gtest.h>

#include <unistd.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gl2wb/cache.hpp"
#include "gl2wb/constituents.hpp"

using namespace gl2wb;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("gl2wb-test-cache-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    cache = std::make_shared<FileCache>(dir);
    reset_caches();
    set_rr_store(cache);
  }
  void TearDown() override {
    set_rr_store(nullptr);
    reset_caches();
    fs::remove_all(dir);
  }

  nlohmann::json read_entry(const fs::path& path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
  }
  void write_entry(const fs::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    out << j.dump();
  }

  fs::path dir;
  std::shared_ptr<FileCache> cache;
};

}  // namespace

TEST_F(CacheTest, ColdThenWarm) {
  const Field& F = Field::get(5, 1);
  const auto fp = fingerprint(*build_R_r(F, 2).R);
  EXPECT_EQ(cache->stats().stores, 1);
  EXPECT_TRUE(fs::exists(cache->entry_path(F, 2)));
  reset_caches();
  const auto& d = build_R_r(F, 2);
  EXPECT_EQ(cache->stats().hits, 1);
  EXPECT_EQ(fingerprint(*d.R), fp);
  EXPECT_EQ(d.W->dim(), 7);
  EXPECT_EQ(d.seed, rr_seed(2));
}

TEST_F(CacheTest, GarbageIsEvicted) {
  const Field& F = Field::get(5, 1);
  const auto fp = fingerprint(*build_R_r(F, 1).R);
  reset_caches();
  write_entry(cache->entry_path(F, 1), nlohmann::json("not an entry"));
  EXPECT_FALSE(cache->load(F, 1).has_value());
  EXPECT_EQ(cache->stats().evictions, 1);
  EXPECT_FALSE(fs::exists(cache->entry_path(F, 1)));
  EXPECT_EQ(fingerprint(*build_R_r(F, 1).R), fp);
  EXPECT_EQ(cache->stats().stores, 2);
}

TEST_F(CacheTest, TamperedGeneratorIsEvicted) {
  const Field& F = Field::get(5, 2);
  build_R_r(F, 1);
  reset_caches();
  const auto path = cache->entry_path(F, 1);
  auto j = read_entry(path);
  auto& entry = j["gens"][0][0][0];
  entry = (entry.get<int>() + 1) % F.q();
  write_entry(path, j);
  EXPECT_FALSE(cache->load(F, 1).has_value());
  EXPECT_EQ(cache->stats().evictions, 1);
}

TEST_F(CacheTest, ConsistentForgeryFailsTheProbe) {
  // Replacing the generators and fingerprint consistently still fails the
  // stored evaluation of the probe element.
  const Field& F = Field::get(5, 1);
  build_R_r(F, 1);
  build_R_r(F, 3);
  reset_caches();
  auto a = read_entry(cache->entry_path(F, 1));
  auto b = read_entry(cache->entry_path(F, 3));
  a["gens"] = b["gens"];
  a["chars"] = b["chars"];
  a["fingerprint"] = b["fingerprint"];
  write_entry(cache->entry_path(F, 1), a);
  EXPECT_FALSE(cache->load(F, 1).has_value());
}

TEST_F(CacheTest, WrongVersionOrFieldIsEvicted) {
  const Field& F = Field::get(5, 1);
  build_R_r(F, 2);
  auto j = read_entry(cache->entry_path(F, 2));
  auto v = j;
  v["format"] = FileCache::kFormatVersion + 1;
  write_entry(cache->entry_path(F, 2), v);
  EXPECT_FALSE(cache->load(F, 2).has_value());
  auto m = j;
  m["modulus"] = "x^2+1";
  write_entry(cache->entry_path(F, 2), m);
  EXPECT_FALSE(cache->load(F, 2).has_value());
  EXPECT_EQ(cache->stats().evictions, 2);
}
