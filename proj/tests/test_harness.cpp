#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "gl2wb/cache.hpp"
#include "gl2wb/harness.hpp"

using namespace gl2wb;
namespace fs = std::filesystem;

namespace {

RunConfig small(std::vector<std::string> suites = {}) {
  RunConfig c;
  c.ps = {5};
  c.fs = {1};
  c.suites = std::move(suites);
  c.samples = 20;
  return c;
}

std::string body(const Report& r) { return to_json(r, false).dump(); }

}  // namespace

TEST(Config, Validation) {
  RunConfig c = small();
  EXPECT_NO_THROW(validate(c));
  c.ps = {4};
  EXPECT_THROW(validate(c), ConfigError);
  c.ps = {2};
  EXPECT_THROW(validate(c), ConfigError);
  c = small();
  c.fs = {0};
  EXPECT_THROW(validate(c), ConfigError);
  c = small();
  c.ps = {17};
  c.fs = {2};
  EXPECT_THROW(validate(c), ConfigError);
  c = small();
  c.samples = 0;
  EXPECT_THROW(validate(c), ConfigError);
  c = small({"no-such-suite"});
  EXPECT_THROW(validate(c), ConfigError);
  EXPECT_THROW(run(c), ConfigError);
}

TEST(Registry, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& s : suite_registry()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_FALSE(s.scope.empty());
  }
  for (const char* id : {"lemma-inter", "a-multfree", "aprime-mult", "aprime-layers", "prop-socleB", "b-no-sigma",
                         "inclusion-criteria", "ext-basis", "alternative", "baer", "icombin", "i-sigma-tau",
                         "serre-weights", "d0", "local-criterion", "rr-structure"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(RegularSigmas, Counts) {
  EXPECT_EQ(regular_sigmas(Field::get(5, 1)).size(), 3u);
  EXPECT_EQ(regular_sigmas(Field::get(7, 1)).size(), 5u);
  EXPECT_EQ(regular_sigmas(Field::get(5, 2)).size(), 15u);
  for (const auto& s : regular_sigmas(Field::get(5, 2))) {
    EXPECT_TRUE(is_regular(Field::get(5, 2), s));
    EXPECT_GE(dimension(s), 2);
  }
}

TEST(Run, SuiteFilter) {
  Report r = run(small({"prop-socleB"}));
  ASSERT_EQ(r.suites.size(), 1u);
  const auto& s = r.suites[0];
  EXPECT_EQ(s.id, "prop-socleB");
  const auto sigmas = regular_sigmas(Field::get(5, 1));
  ASSERT_EQ(s.points.size(), sigmas.size() + 1);
  for (size_t k = 0; k < sigmas.size(); ++k) EXPECT_EQ(s.points[k].point, to_string(sigmas[k]));
  EXPECT_NE(s.points.back().point.find("twist sample"), std::string::npos);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.suite("baer"), nullptr);
}

TEST(Run, DeterministicAcrossRunsAndJobs) {
  Report a = run(small());
  EXPECT_TRUE(a.ok());
  Report b = run(small());
  EXPECT_EQ(body(a), body(b));
  RunConfig c = small();
  c.jobs = 3;
  EXPECT_EQ(body(run(c)), body(a));
  const auto j = to_json(a, false);
  EXPECT_EQ(j["schema"], Report::kSchema);
  EXPECT_FALSE(j.contains("runtime"));
  EXPECT_TRUE(to_json(a).contains("runtime"));
}

TEST(Run, SeedsDependOnPoint) {
  EXPECT_NE(point_seed(1, "baer", 5, 1, "a"), point_seed(1, "baer", 5, 1, "b"));
  EXPECT_NE(point_seed(1, "baer", 5, 1, "a"), point_seed(2, "baer", 5, 1, "a"));
  EXPECT_NE(point_seed(1, "baer", 5, 1, "a"), point_seed(1, "alternative", 5, 1, "a"));
  EXPECT_EQ(point_seed(1, "baer", 5, 1, "a"), point_seed(1, "baer", 5, 1, "a"));
}

TEST(Run, CacheColdWarmCorruptDisabled) {
  const fs::path dir = fs::temp_directory_path() / ("gl2wb-test-run-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  RunConfig c = small();
  c.cache_dir = dir.string();
  Report cold = run(c);
  EXPECT_GT(cold.cache["stores"].get<int>(), 0);
  Report warm = run(c);
  EXPECT_EQ(warm.cache["stores"].get<int>(), 0);
  EXPECT_GT(warm.cache["hits"].get<int>(), 0);
  EXPECT_EQ(body(cold), body(warm));

  FileCache probe(dir);
  {
    std::ofstream out(probe.entry_path(Field::get(5, 1), 2));
    out << "{\"format\": 1}";
  }
  Report healed = run(c);
  EXPECT_EQ(healed.cache["evictions"].get<int>(), 1);
  EXPECT_TRUE(healed.ok());
  EXPECT_EQ(body(healed), body(cold));

  Report none = run(small());
  EXPECT_FALSE(none.cache["enabled"].get<bool>());
  EXPECT_EQ(body(none), body(cold));
  fs::remove_all(dir);
}
