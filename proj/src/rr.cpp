#include <map>
#include <mutex>
#include <tuple>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/fitting.hpp"

namespace gl2wb {

namespace {

std::mutex rr_mu;
std::map<std::tuple<int, int, int>, std::unique_ptr<RrData>> rr_registry;
std::shared_ptr<RrStore> rr_store;

}  // namespace

WeightLabel rr_socle_label(const Field& F, int r) {
  std::vector<int> s(F.f(), 0);
  s[0] = r;
  return make_label(F, s, F.p() - 1 - r);
}

std::uint64_t rr_seed(int r) { return 0x5252000000ULL + static_cast<std::uint64_t>(r); }

void set_rr_store(std::shared_ptr<RrStore> store) {
  std::lock_guard lock(rr_mu);
  rr_store = std::move(store);
}

void clear_rr_registry() {
  std::lock_guard lock(rr_mu);
  rr_registry.clear();
}

RrData extract_R_r(const Field& F, int r, std::uint64_t seed) {
  const int p = F.p();
  if (r < 0 || r > p - 1) throw std::invalid_argument("r out of range");
  RrData d;
  d.r = r;
  d.seed = seed;
  if (r == p - 1) {
    d.R = sym(F, p - 1);
    d.soc = whole(d.R);
    return d;
  }
  const WeightLabel target = rr_socle_label(F, r);
  Module X = tensor(sym(F, p - 1 - r), sym(F, p - 1));
  Rng rng(seed);
  auto parts = fitting_decompose(X, rng);
  std::vector<std::pair<Module, Submodule>> candidates;
  for (const auto& S : parts) {
    Module Y = sub_module(S);
    auto soc = socle(Y);
    bool hit = false;
    for (const auto& piece : soc) hit = hit || piece.label == target;
    if (!hit) continue;
    if (soc.size() != 1 || soc[0].mult != 1)
      throw ExtractionFailed("summand containing " + to_string(target) + " in its socle has a larger socle");
    candidates.emplace_back(Y, soc[0].sub);
  }
  if (candidates.size() != 1)
    throw ExtractionFailed(std::to_string(candidates.size()) + " summands with socle " + to_string(target));
  d.R = candidates[0].first;
  d.soc = candidates[0].second;
  if (d.R->dim() != 2 * p)
    throw ExtractionFailed("summand with socle " + to_string(target) + " has dimension " + std::to_string(d.R->dim()) +
                           ", expected " + std::to_string(2 * p));
  Cosocle c = cosocle(d.R);
  if (c.pieces.size() != 1 || c.pieces[0].mult != 1 || c.pieces[0].label != target)
    throw ExtractionFailed("cosocle of R_" + std::to_string(r) + " is " + to_string(labels_of(c)));
  if (c.radical.dim() != 2 * p - r - 1) throw ExtractionFailed("W_r has the wrong dimension");
  d.W = c.radical;
  return d;
}

const RrData& build_R_r(const Field& F, int r) {
  const auto key = std::make_tuple(F.p(), F.f(), r);
  std::shared_ptr<RrStore> store;
  {
    std::lock_guard lock(rr_mu);
    auto it = rr_registry.find(key);
    if (it != rr_registry.end()) return *it->second;
    store = rr_store;
  }
  std::unique_ptr<RrData> d;
  if (store) {
    if (auto hit = store->load(F, r)) d = std::make_unique<RrData>(std::move(*hit));
  }
  if (!d) {
    d = std::make_unique<RrData>(extract_R_r(F, r, rr_seed(r)));
    if (store) store->save(F, *d);
  }
  std::lock_guard lock(rr_mu);
  auto [it, inserted] = rr_registry.emplace(key, std::move(d));
  return *it->second;
}

std::vector<MuPair> mu_weights(const Field& F, const WeightLabel& sigma) {
  const int p = F.p(), f = F.f();
  const auto& r = sigma.s;
  std::vector<MuPair> out;
  if (f == 1) {
    MuPair m{make_label(F, {p - 1 - r[0]}, 0), std::nullopt};
    if (r[0] != p - 2) m.minus = make_label(F, {p - 3 - r[0]}, 1);
    out.push_back(m);
    return out;
  }
  const long long total = digit_value(F, r);
  long long pi = 1;
  for (int i = 0; i < f; ++i, pi *= p) {
    const int j = (i + 1) % f;
    std::vector<int> s = r;
    s[i] = p - 2 - r[i];
    s[j] = r[j] + 1;
    MuPair m{make_label(F, s, pi * (r[i] + 1) - pi * p - total), std::nullopt};
    if (r[j] != 0) {
      s[j] = r[j] - 1;
      m.minus = make_label(F, s, pi * (r[i] + 1) - total);
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace gl2wb
