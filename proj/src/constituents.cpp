#include "gl2wb/constituents.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <tuple>

namespace gl2wb {

namespace {

std::mutex info_mu;
std::map<std::tuple<int, int, WeightLabel, WeightLabel>, std::optional<ISigmaTauInfo>> info_cache;

std::set<WeightLabel> as_set(const std::vector<WeightLabel>& v) { return {v.begin(), v.end()}; }

// Layer-one elements of the shape (x, .., p-2-x, x+-1, .., x) name mu_i^+-.
std::optional<WeightLabel> mu_label_of(const SigmaContext& ctx, const Lambda& lam) {
  const int f = static_cast<int>(lam.size());
  if (S_of(lam).size() != 1) return std::nullopt;
  if (f == 1) {
    if (lam[0] == Tag::NPlus) return ctx.mu[0].plus;
    if (lam[0] == Tag::NMinus) return ctx.mu[0].minus;
    return std::nullopt;
  }
  for (int i = 0; i < f; ++i) {
    const int j = (i + 1) % f;
    if (lam[i] != Tag::N || (lam[j] != Tag::XPlus && lam[j] != Tag::XMinus)) continue;
    bool rest = true;
    for (int k = 0; k < f; ++k)
      if (k != i && k != j && lam[k] != Tag::X) rest = false;
    if (!rest) continue;
    return lam[j] == Tag::XPlus ? std::optional(ctx.mu[i].plus) : ctx.mu[i].minus;
  }
  return std::nullopt;
}

}  // namespace

const ConstituentMap::Entry* ConstituentMap::by_label(const WeightLabel& L) const {
  for (const auto& e : entries)
    if (e.label == L) return &e;
  return nullptr;
}

const ConstituentMap::Entry* ConstituentMap::by_lambda(const Lambda& lam) const {
  for (const auto& e : entries)
    if (e.lam == lam) return &e;
  return nullptr;
}

std::optional<ISigmaTauInfo> i_sigma_tau_info(const SigmaContext& ctx, const WeightLabel& tau) {
  const auto key = std::make_tuple(ctx.field().p(), ctx.field().f(), ctx.sigma, tau);
  {
    std::lock_guard lock(info_mu);
    auto it = info_cache.find(key);
    if (it != info_cache.end()) return it->second;
  }
  std::optional<ISigmaTauInfo> out;
  if (auto sub = i_sigma_tau(ctx, tau, false)) out = ISigmaTauInfo{*sub, composition_factors(sub_module(*sub))};
  std::lock_guard lock(info_mu);
  info_cache.emplace(key, out);
  return out;
}

void reset_caches() {
  {
    std::lock_guard lock(info_mu);
    info_cache.clear();
  }
  clear_sigma_contexts();
  clear_rr_registry();
}

ConstituentMap label_constituents(const SigmaContext& ctx) {
  const Field& F = ctx.field();
  ConstituentMap out;
  SocleFiltration sf = socle_filtration(ctx.A_node);
  struct Cons {
    WeightLabel label;
    int layer;
  };
  std::vector<Cons> cons;
  for (size_t l = 0; l < sf.layers.size(); ++l)
    for (const auto& L : sf.layers[l]) cons.push_back({L, static_cast<int>(l)});
  std::vector<Lambda> lams;
  std::vector<std::vector<int>> cands;
  for (const auto& lam : enumerate_I(F.f())) {
    Evaluation e = evaluate(F.p(), lam, ctx.sigma.s);
    if (e.fake) continue;
    std::vector<int> c;
    for (size_t k = 0; k < cons.size(); ++k)
      if (cons[k].label.s == e.s && cons[k].layer == static_cast<int>(S_of(lam).size())) c.push_back(static_cast<int>(k));
    if (c.empty()) {
      out.detail = "no constituent of A_sigma matches " + to_string(lam);
      return out;
    }
    if (auto mu = mu_label_of(ctx, lam)) {
      std::vector<int> pinned;
      for (int k : c)
        if (cons[k].label == *mu) pinned.push_back(k);
      if (pinned.empty()) {
        out.detail = to_string(lam) + " does not evaluate to " + to_string(*mu);
        return out;
      }
      c = pinned;
    }
    lams.push_back(lam);
    cands.push_back(c);
  }
  if (lams.size() != cons.size()) {
    out.detail = std::to_string(lams.size()) + " genuine index elements for " + std::to_string(cons.size()) + " constituents";
    return out;
  }
  std::vector<int> assign(lams.size(), -1);
  std::vector<char> used(cons.size(), 0);
  auto label_of = [&](const Lambda& lam) -> const WeightLabel* {
    for (size_t i = 0; i < lams.size(); ++i)
      if (lams[i] == lam) return &cons[assign[i]].label;
    return nullptr;
  };
  auto consistent = [&]() {
    for (size_t i = 0; i < lams.size(); ++i) {
      if (cands[i].size() < 2) continue;
      auto info = i_sigma_tau_info(ctx, cons[assign[i]].label);
      if (!info) return false;
      std::set<WeightLabel> predicted;
      for (const auto& lam : predicted_constituents(F.p(), ctx.sigma.s, lams[i]).genuine) {
        const WeightLabel* L = label_of(lam);
        if (!L) return false;
        predicted.insert(*L);
      }
      if (predicted != as_set(info->factors)) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> solutions;
  std::function<void(size_t)> search = [&](size_t i) {
    if (i == lams.size()) {
      if (consistent()) solutions.push_back(assign);
      return;
    }
    for (int k : cands[i]) {
      if (used[k]) continue;
      used[k] = 1;
      assign[i] = k;
      search(i + 1);
      used[k] = 0;
    }
  };
  search(0);
  if (solutions.empty()) {
    out.detail = "no consistent matching";
    return out;
  }
  int ties = 0;
  for (size_t i = 0; i < lams.size(); ++i) ties += cands[i].size() > 1;
  for (const auto& sol : solutions) {
    std::vector<ConstituentMap::Entry> entries;
    for (size_t i = 0; i < lams.size(); ++i)
      entries.push_back({lams[i], cons[sol[i]].label, cons[sol[i]].layer, cands[i].size() > 1});
    out.alternatives.push_back(std::move(entries));
  }
  out.entries = out.alternatives.front();
  out.ok = true;
  out.detail = std::to_string(out.entries.size()) + " constituents, " + std::to_string(ties) + " tied, " +
               std::to_string(solutions.size()) + " consistent matching(s)";
  return out;
}

SerreStructure check_serre_structure(const Field& F, const std::vector<WeightLabel>& weights) {
  SerreStructure out;
  const auto D = as_set(weights);
  for (const auto& s : weights) {
    auto ctx = sigma_context(F, s);
    bool closed = true, found = false;
    std::string bad;
    for (const auto& t : weights) {
      if (t == s) continue;
      auto info = i_sigma_tau_info(*ctx, t);
      if (!info) continue;
      for (const auto& L : info->factors)
        if (!D.count(L)) {
          closed = false;
          bad = to_string(L) + " in I(sigma, " + to_string(t) + ")";
        }
      if (as_set(info->factors) == D && !found) {
        out.complements.emplace_back(s, t);
        found = true;
      }
    }
    out.closed = out.closed && closed;
    out.checks.push_back({"closure " + to_string(s), closed, closed ? "constituents stay in D" : bad});
    out.checks.push_back({"complement " + to_string(s), found,
                          found ? "sigma^c = " + to_string(out.complements.back().second) : "no I(sigma, tau) exhausts D"});
  }
  return out;
}

namespace {

std::vector<Check> auxiliary_under(const Field& F, const SigmaContext& ctx_ref, const ConstituentMap& cmap,
                                   const WeightLabel& sigma_c, const std::string& tag) {
  std::vector<Check> out;
  const SigmaContext* ctx = &ctx_ref;
  auto info = i_sigma_tau_info(*ctx, sigma_c);
  const auto* ec = cmap.by_label(sigma_c);
  if (!info || !ec) {
    out.push_back({"hypothesis " + tag, false, "I(sigma, sigma^c) does not exist"});
    return out;
  }
  const auto Sc = S_of(ec->lam);
  const bool full = info->factors.size() == (1u << Sc.size());
  out.push_back({"hypothesis " + tag, full, std::to_string(info->factors.size()) + " constituents, |S(sigma^c)| = " + std::to_string(Sc.size())});
  if (!full) return out;
  auto reference = info->factors;
  std::sort(reference.begin(), reference.end());
  for (const auto& tau : info->factors) {
    const std::string tt = to_string(tau);
    out.push_back({"(i) regular " + tt, is_regular(F, tau), ""});
    const auto* et = cmap.by_label(tau);
    std::vector<int> target;
    const auto St = S_of(et->lam);
    std::set_difference(Sc.begin(), Sc.end(), St.begin(), St.end(), std::back_inserter(target));
    std::vector<WeightLabel> hits;
    for (const auto& other : info->factors)
      if (S_of(cmap.by_label(other)->lam) == target) hits.push_back(other);
    out.push_back({"(ii) unique complement " + tt, hits.size() == 1, std::to_string(hits.size()) + " candidates"});
    if (hits.size() != 1) continue;
    const WeightLabel& tc = hits[0];
    bool same = false;
    std::string detail;
    if (!is_regular(F, tau) || dimension(tau) < 2) {
      detail = "no context for " + tt;
    } else {
      auto info2 = i_sigma_tau_info(*sigma_context(F, tau), tc);
      if (!info2) {
        detail = "I(tau, tau^c) does not exist";
      } else {
        auto f2 = info2->factors;
        std::sort(f2.begin(), f2.end());
        same = f2 == reference;
        detail = "tau^c = " + to_string(tc) + ", constituents " + to_string(f2);
      }
    }
    out.push_back({"(iii) same semisimplification " + tt, same, detail});
  }
  return out;
}

}  // namespace

std::vector<Check> auxiliary_checks(const Field& F, const WeightLabel& sigma, const WeightLabel& sigma_c) {
  auto ctx = sigma_context(F, sigma);
  const std::string tag = to_string(sigma) + " / " + to_string(sigma_c);
  ConstituentMap cmap = label_constituents(*ctx);
  std::vector<Check> out{{"labelling " + tag, cmap.ok, cmap.detail}};
  if (!cmap.ok) return out;
  std::vector<Check> first;
  bool agree = true;
  for (size_t k = 0; k < cmap.alternatives.size(); ++k) {
    ConstituentMap alt = cmap;
    alt.entries = cmap.alternatives[k];
    auto checks = auxiliary_under(F, *ctx, alt, sigma_c, tag);
    if (k == 0) {
      first = checks;
      continue;
    }
    if (checks.size() != first.size()) agree = false;
    for (size_t i = 0; agree && i < checks.size(); ++i)
      if (checks[i].name != first[i].name || checks[i].ok != first[i].ok) agree = false;
  }
  if (cmap.alternatives.size() > 1)
    out.push_back({"matching invariance " + tag, agree,
                   std::to_string(cmap.alternatives.size()) + " matchings " + (agree ? "agree" : "disagree")});
  out.insert(out.end(), first.begin(), first.end());
  return out;
}

}  // namespace gl2wb
