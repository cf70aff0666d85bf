#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gl2wb/harness.hpp"

namespace fs = std::filesystem;
using namespace gl2wb;
using nlohmann::json;

namespace {

constexpr int kMinSpinsPerSigma = 100;
constexpr int kMinBaerTriples = 20;
constexpr double kF2BudgetSeconds = 1800;

struct Range {
  int p, f;
};
const std::vector<Range> kMain{{5, 1}, {7, 1}, {5, 2}};
const std::vector<Range> kRr{{5, 1}, {7, 1}, {5, 2}, {7, 2}};

struct Runs {
  std::map<std::pair<int, int>, Report> main;
  Report rr72;
};

RunConfig config_for(Range r, const std::vector<std::string>& suites, int samples, std::uint64_t seed,
                     const std::string& cache) {
  RunConfig c;
  c.ps = {r.p};
  c.fs = {r.f};
  c.suites = suites;
  c.samples = samples;
  c.seed = seed;
  c.cache_dir = cache;
  return c;
}

Runs run_all(int samples, std::uint64_t seed, const std::string& cache) {
  Runs out;
  for (auto r : kMain) out.main.emplace(std::make_pair(r.p, r.f), run(config_for(r, {}, samples, seed, cache)));
  out.rr72 = run(config_for({7, 2}, {"rr-structure"}, samples, seed, cache));
  return out;
}

std::string fingerprint(const Runs& runs) {
  std::string s;
  for (const auto& [k, rep] : runs.main) s += to_json(rep, false).dump() + "\n";
  return s + to_json(runs.rr72, false).dump() + "\n";
}

const Report& report_at(const Runs& runs, Range r) {
  if (r.p == 7 && r.f == 2) return runs.rr72;
  return runs.main.at({r.p, r.f});
}

struct Tally {
  int points = 0, failed = 0;
  std::string first_failure;
  void add(const SuiteResult& s) {
    for (const auto& pt : s.points) {
      ++points;
      if (pt.ok) continue;
      if (!failed++) {
        for (const auto& c : pt.checks)
          if (!c.ok) {
            first_failure = "p=" + std::to_string(pt.p) + " f=" + std::to_string(pt.f) + " " + pt.point + ": " + c.name;
            break;
          }
      }
    }
  }
  bool ok() const { return failed == 0 && points > 0; }
  std::string summary() const {
    std::string s = std::to_string(points) + " points, " + std::to_string(failed) + " failed";
    return failed ? s + " (first: " + first_failure + ")" : s;
  }
};

/// Sums an integer witness over every point of a suite in the given ranges.
long long witness_sum(const Runs& runs, const std::vector<Range>& ranges, const std::string& suite, const std::string& key) {
  long long total = 0;
  for (auto r : ranges)
    if (const auto* s = report_at(runs, r).suite(suite))
      for (const auto& pt : s->points)
        if (pt.witness.contains(key)) total += pt.witness.at(key).get<long long>();
  return total;
}

/// Smallest integer witness over every point of a suite (or -1 if absent somewhere).
long long witness_min(const Runs& runs, const std::vector<Range>& ranges, const std::string& suite, const std::string& key) {
  long long best = -1;
  for (auto r : ranges)
    if (const auto* s = report_at(runs, r).suite(suite))
      for (const auto& pt : s->points) {
        if (!pt.witness.contains(key)) return -1;
        const long long v = pt.witness.at(key).get<long long>();
        best = best < 0 ? v : std::min(best, v);
      }
  return best;
}

Tally tally(const Runs& runs, const std::vector<Range>& ranges, const std::vector<std::string>& suites) {
  Tally t;
  for (auto r : ranges)
    for (const auto& id : suites) {
      const auto* s = report_at(runs, r).suite(id);
      if (!s) {
        ++t.failed;
        t.first_failure = id + " missing at p=" + std::to_string(r.p) + " f=" + std::to_string(r.f);
        continue;
      }
      t.add(*s);
    }
  return t;
}

int failures = 0;

void line(int n, const std::string& title, bool ok, const std::string& detail) {
  failures += !ok;
  std::printf("criterion %2d %s  %s: %s\n", n, ok ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-11"};
  std::uint64_t seed = 1;
  int samples = kMinSpinsPerSigma;
  std::string report_dir;
  app.add_option("--seed", seed, "run seed");
  app.add_option("--samples", samples, "random spins per sigma");
  app.add_option("--report-dir", report_dir, "write the reports of the first pass here");
  CLI11_PARSE(app, argc, argv);

  const fs::path cache = fs::temp_directory_path() / ("gl2wb-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(cache);

  try {
    const Runs cold = run_all(samples, seed, cache.string());
    if (!report_dir.empty()) {
      fs::create_directories(report_dir);
      for (const auto& [k, rep] : cold.main) {
        std::ofstream out(fs::path(report_dir) / ("report_p" + std::to_string(k.first) + "_f" + std::to_string(k.second) + ".json"));
        out << to_json(rep).dump(2) << "\n";
      }
      std::ofstream out(fs::path(report_dir) / "report_p7_f2_rr.json");
      out << to_json(cold.rr72).dump(2) << "\n";
    }

    {
      Tally t = tally(cold, kRr, {"rr-structure"});
      line(1, "R_r structure", t.ok(),
           t.summary() + " over (5,1),(7,1),(5,2),(7,2); f=1 r=0 asserts that no 2p-dimensional summand exists");
    }
    {
      Tally t = tally(cold, kMain, {"prop-socleB"});
      const double f2 = cold.main.at({5, 2}).seconds;
      char buf[64];
      std::snprintf(buf, sizeof buf, "; full f=2 run %.1fs (budget %.0fs)", f2, kF2BudgetSeconds);
      line(2, "soc(R/A) = sigma^f", t.ok() && f2 <= kF2BudgetSeconds, t.summary() + buf);
    }
    {
      Tally t = tally(cold, kMain, {"aprime-mult", "a-multfree"});
      line(3, "multiplicity f+1 in A', A multiplicity free", t.ok(), t.summary());
    }
    {
      Tally t = tally(cold, kMain, {"ext-basis"});
      line(4, "dim Ext1(sigma, A) = f and the X_i basis", t.ok(), t.summary());
    }
    {
      Tally t = tally(cold, kMain, {"inclusion-criteria", "alternative"});
      const long long spins = std::min(witness_min(cold, kMain, "inclusion-criteria", "sampled"),
                                       witness_min(cold, kMain, "alternative", "sampled"));
      const long long counter = witness_sum(cold, kMain, "inclusion-criteria", "counterexamples") +
                                witness_sum(cold, kMain, "alternative", "counterexamples");
      const long long hyp = witness_sum(cold, kMain, "inclusion-criteria", "hypothesis");
      const long long alt = witness_sum(cold, kMain, "alternative", "alternative");
      line(5, "inclusion criteria and alternative submodules",
           t.ok() && spins >= kMinSpinsPerSigma && counter == 0,
           t.summary() + "; min spins per sigma " + std::to_string(spins) + " (need " + std::to_string(kMinSpinsPerSigma) +
               "), " + std::to_string(hyp) + " hypothesis cases, " + std::to_string(alt) + " alternative cases, " +
               std::to_string(counter) + " counterexamples");
    }
    {
      Tally t = tally(cold, kMain, {"baer"});
      const long long valid = witness_sum(cold, kMain, "baer", "valid");
      const long long counter = witness_sum(cold, kMain, "baer", "counterexamples");
      line(6, "Baer sums", t.ok() && valid >= kMinBaerTriples && counter == 0,
           t.summary() + "; " + std::to_string(valid) + " triples satisfy the hypotheses (need " +
               std::to_string(kMinBaerTriples) + "), " + std::to_string(counter) + " counterexamples");
    }
    {
      Tally t = tally(cold, kMain, {"icombin"});
      line(7, "index set, oneweight, auxiliary", t.ok(), t.summary());
    }
    {
      Tally t = tally(cold, kMain, {"serre-weights"});
      line(8, "Serre weight sets", t.ok(), t.summary());
    }
    {
      Tally t = tally(cold, kMain, {"d0"});
      line(9, "D0 conditions", t.ok(), t.summary());
    }
    {
      Tally t = tally(cold, kMain, {"local-criterion"});
      const long long ens = witness_sum(cold, kMain, "local-criterion", "enlargements");
      line(10, "local criterion", t.ok(), t.summary() + "; " + std::to_string(ens) + " enlargements rejected");
    }
    {
      const std::string a = fingerprint(cold);
      const Runs warm = run_all(samples, seed, cache.string());
      const Runs none = run_all(samples, seed, "");
      int hits = 0, stores = 0;
      for (const auto& [k, rep] : warm.main) {
        hits += rep.cache.value("hits", 0);
        stores += rep.cache.value("stores", 0);
      }
      const bool same_warm = fingerprint(warm) == a, same_none = fingerprint(none) == a;
      line(11, "determinism", same_warm && same_none && stores == 0 && hits > 0,
           std::string("cold vs warm cache ") + (same_warm ? "identical" : "DIFFER") + ", cold vs no cache " +
               (same_none ? "identical" : "DIFFER") + "; warm run " + std::to_string(hits) + " hits, " +
               std::to_string(stores) + " new entries; " + std::to_string(a.size()) + " report bytes");
    }
    {
      Tally t = tally(cold, kMain, {"lemma-inter", "aprime-layers", "b-no-sigma", "i-sigma-tau"});
      failures += !t.ok();
      std::printf("supporting    %s  intersections, A'_i layers, B/A', I(sigma, tau): %s\n", t.ok() ? "PASS" : "FAIL",
                  t.summary().c_str());
    }
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    fs::remove_all(cache);
    return 2;
  }
  fs::remove_all(cache);
  std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED");
  return failures ? 1 : 0;
}
