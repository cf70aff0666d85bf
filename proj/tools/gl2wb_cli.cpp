#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "gl2wb/cache.hpp"
#include "gl2wb/harness.hpp"
#include "gl2wb/serre.hpp"

namespace fs = std::filesystem;
using namespace gl2wb;

namespace {

int cmd_run(RunConfig config, bool runtime) {
  if (config.cache_dir.empty()) config.cache_dir = cache_dir_from_env();
  Report report = run(config);
  for (const auto& s : report.suites) {
    int failed = 0;
    for (const auto& pt : s.points) failed += !pt.ok;
    std::fprintf(stderr, "%-20s %s  %zu points, %d failed, %.2fs\n", s.id.c_str(), s.ok() ? "PASS" : "FAIL",
                 s.points.size(), failed, s.seconds);
    for (const auto& pt : s.points) {
      if (pt.ok) continue;
      for (const auto& c : pt.checks)
        if (!c.ok)
          std::fprintf(stderr, "  p=%d f=%d %s: %s %s\n", pt.p, pt.f, pt.point.c_str(), c.name.c_str(), c.detail.c_str());
    }
  }
  const std::string text = to_json(report, runtime).dump(2) + "\n";
  if (config.out.empty() || config.out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(config.out);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + config.out);
  }
  return report.ok() ? 0 : 1;
}

int cmd_cache(const std::string& action, std::string dir) {
  if (dir.empty()) dir = cache_dir_from_env();
  if (dir.empty()) throw ConfigError("no cache directory (use --cache-dir or GL2WB_CACHE_DIR)");
  if (action == "clear") {
    int removed = 0;
    if (fs::exists(dir))
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json" || e.path().extension() == ".tmp") removed += fs::remove(e.path());
    std::printf("removed %d entries\n", removed);
    return 0;
  }
  FileCache cache(dir);
  const std::regex name(R"(rr_p(\d+)_f(\d+)_r(\d+)\.json)");
  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(dir)) entries.push_back(e.path());
  std::sort(entries.begin(), entries.end());
  int bad = 0;
  for (const auto& path : entries) {
    std::smatch m;
    const std::string file = path.filename().string();
    if (!std::regex_match(file, m, name)) continue;
    const int p = std::stoi(m[1]), f = std::stoi(m[2]), r = std::stoi(m[3]);
    if (action == "ls") {
      std::printf("%s  %ju bytes\n", file.c_str(), static_cast<std::uintmax_t>(fs::file_size(path)));
      continue;
    }
    bool ok = false;
    try {
      ok = cache.load(Field::get(p, f), r).has_value();
    } catch (const std::exception&) {
    }
    bad += !ok;
    std::printf("%s  %s\n", file.c_str(), ok ? "ok" : "evicted");
  }
  return bad ? 1 : 0;
}

int cmd_weights(const std::string& text) {
  const ParsedSpec ps = parse_spec(text);
  const Field& F = Field::get(ps.p, ps.f);
  for (const auto& s : serre_weights(F, ps.spec)) std::printf("%s  dim %d\n", to_string(s).c_str(), dimension(s));
  return 0;
}

int cmd_d0(const std::string& text) {
  const ParsedSpec ps = parse_spec(text);
  const Field& F = Field::get(ps.p, ps.f);
  const D0Result d0 = build_D0(F, serre_weights(F, ps.spec));
  bool ok = true;
  std::printf("D0 of dimension %d in an ambient of dimension %d\n", d0.D0.dim(), d0.ambient->dim());
  for (const auto& c : check_D0(d0)) {
    ok = ok && c.ok;
    std::printf("%s  %s %s\n", c.ok ? "ok  " : "FAIL", c.name.c_str(), c.detail.c_str());
  }
  const auto lc = local_criterion(d0, d0.D0);
  ok = ok && lc.holds;
  std::printf("%s  local criterion\n", lc.holds ? "ok  " : "FAIL");
  for (const auto& [t, h] : lc.hom_dims) std::printf("      dim Hom(%s, -) = %d\n", to_string(t).c_str(), h);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for mod p representations of GL2(F_q)"};
  app.require_subcommand(1);

  RunConfig config;
  bool no_runtime = false;
  auto* run_cmd = app.add_subcommand("run", "run suites and write a JSON report");
  run_cmd->add_option("--p", config.ps, "primes")->delimiter(',');
  run_cmd->add_option("--f", config.fs, "residue degrees")->delimiter(',');
  run_cmd->add_option("--suite", config.suites, "suite ids (default all)")->delimiter(',');
  run_cmd->add_option("--samples", config.samples, "random submodules per sigma");
  run_cmd->add_option("--seed", config.seed, "run seed");
  run_cmd->add_option("--cache-dir", config.cache_dir, "persistent R_r cache (default $GL2WB_CACHE_DIR)");
  run_cmd->add_option("--out", config.out, "report path (default stdout)");
  run_cmd->add_option("--jobs", config.jobs, "worker threads");
  run_cmd->add_flag("--no-runtime", no_runtime, "omit timings and cache statistics");

  std::string action = "ls", cache_dir;
  auto* cache_cmd = app.add_subcommand("cache", "inspect the R_r cache");
  cache_cmd->add_option("action", action, "ls, verify or clear")->check(CLI::IsMember({"ls", "verify", "clear"}));
  cache_cmd->add_option("--cache-dir", cache_dir, "cache directory");

  std::string spec;
  auto* weights_cmd = app.add_subcommand("weights", "print the Serre weights of a tame parameter");
  weights_cmd->add_option("spec", spec, "e.g. \"p=5 f=2 niveau=1 r=1,2 eta=0\"")->required();
  auto* d0_cmd = app.add_subcommand("d0", "build D0 and check its conditions");
  d0_cmd->add_option("spec", spec, "e.g. \"p=5 f=1 niveau=2 r=1 eta=0\"")->required();

  auto* list_cmd = app.add_subcommand("suites", "list suite ids");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return cmd_run(config, !no_runtime);
    if (*cache_cmd) return cmd_cache(action, cache_dir);
    if (*weights_cmd) return cmd_weights(spec);
    if (*d0_cmd) return cmd_d0(spec);
    if (*list_cmd) {
      for (const auto& s : suite_registry()) std::printf("%-20s %s\n", s.id.c_str(), s.statement.c_str());
      return 0;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
