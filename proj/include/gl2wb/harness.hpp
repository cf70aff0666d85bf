#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gl2wb/bpcore.hpp"

namespace gl2wb {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::vector<int> ps{5};
  std::vector<int> fs{1};
  std::vector<std::string> suites;  // empty = all
  int samples = 100;
  std::uint64_t seed = 1;
  std::string cache_dir;  // empty = no persistent cache
  std::string out;
  int jobs = 1;
};
/// Throws ConfigError before any computation.
void validate(const RunConfig& config);

struct PointResult {
  int p = 0, f = 0;
  std::string point;
  std::uint64_t seed = 0;
  bool ok = true;
  std::vector<Check> checks;
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0;

  void check(const std::string& name, bool pass, const std::string& detail = "");
};

struct SuiteResult {
  std::string id, statement, scope;
  std::vector<PointResult> points;
  double seconds = 0;
  bool ok() const;
};

struct Report {
  static constexpr const char* kSchema = "gl2wb-report/1";
  RunConfig config;
  std::vector<SuiteResult> suites;
  double seconds = 0;
  nlohmann::json cache = nlohmann::json::object();
  bool ok() const;
  const SuiteResult* suite(const std::string& id) const;
};

/// One parameter point of a suite, planned up front so that results can be
/// merged in registry order whatever order the pool finishes them in.
struct Task {
  int p = 0, f = 0;
  std::string point;
  std::function<void(PointResult&, Rng&)> body;
};

struct SuiteInfo {
  std::string id, statement, scope;
  std::function<std::vector<Task>(const Field&, const RunConfig&)> plan;
};
const std::vector<SuiteInfo>& suite_registry();

Report run(const RunConfig& config);

/// Everything except the "runtime" member is deterministic for a fixed
/// config; runtime holds timings and cache statistics.
nlohmann::json to_json(const Report& report, bool include_runtime = true);

/// Seed of one point, derived from the run seed and the point's identity.
std::uint64_t point_seed(std::uint64_t seed, const std::string& suite, int p, int f, const std::string& point);

/// Normalized regular weights of dimension >= 2.
std::vector<WeightLabel> regular_sigmas(const Field& F);

}  // namespace gl2wb
