#include "gl2wb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "gl2wb/cache.hpp"
#include "gl2wb/constituents.hpp"
#include "gl2wb/hom.hpp"
#include "gl2wb/icombin.hpp"
#include "gl2wb/serre.hpp"

namespace gl2wb {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string hex(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<WeightLabel> sorted(std::vector<WeightLabel> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string series_string(const std::vector<std::vector<WeightLabel>>& layers) {
  std::string s;
  for (const auto& l : layers) s += "[" + to_string(l) + "]";
  return s;
}

bool same_span(const Matrix& a, const Matrix& b) { return rref(a).m == rref(b).m; }

Matrix random_in(const Submodule& S, Rng& rng) {
  const Field& F = S.ambient->field();
  Matrix v(F, 1, S.ambient->dim());
  for (int i = 0; i < S.dim(); ++i) axpy(F, v.row(0), S.rows().row(i), rng.elem(F), v.cols());
  return v;
}

// ---------------------------------------------------------------------------
// Submodules of R_sigma used by the inclusion suites.

struct TestSub {
  std::string kind;
  Submodule M;
  bool sampled;
};

std::vector<TestSub> structured_submodules(const SigmaContext& ctx) {
  std::vector<TestSub> out;
  auto add = [&](const std::string& k, const Submodule& M) { out.push_back({k, M, false}); };
  add("soc", ctx.soc);
  add("A", ctx.A);
  add("A'", ctx.Aprime);
  add("B", ctx.B);
  add("R", whole(ctx.R));
  add("Fil1", ctx.fil1);
  add("A meet A'", ctx.AmeetAprime);
  for (int i = 0; i < ctx.f(); ++i) {
    add("A'_" + std::to_string(i), ctx.Aprime_i[i]);
    add("X_" + std::to_string(i), ctx.X_total(i));
    add("W_" + std::to_string(i) + " (x) rest", ctx.Ainter[i]);
  }
  for (const auto& g : ctx.gr1) {
    add("Fil1 pullback " + to_string(g.label), g.preimage);
    for (int i = 0; i < ctx.f(); ++i)
      add("A'_" + std::to_string(i) + " + pullback " + to_string(g.label), sum(ctx.Aprime_i[i], g.preimage));
  }
  return out;
}

std::vector<TestSub> sampled_submodules(const SigmaContext& ctx, int samples, Rng& rng) {
  std::vector<Submodule> pool{whole(ctx.R), ctx.B, ctx.Aprime, ctx.fil1, ctx.A, ctx.AmeetAprime};
  for (int i = 0; i < ctx.f(); ++i) {
    pool.push_back(ctx.Aprime_i[i]);
    pool.push_back(ctx.X_total(i));
    pool.push_back(sum(ctx.Aprime_i[i], ctx.fil1));
  }
  for (const auto& g : ctx.gr1) pool.push_back(g.preimage);
  std::vector<TestSub> out;
  for (int t = 0; t < samples; ++t) {
    const Submodule& src = pool[rng.below(pool.size())];
    const int k = 1 + static_cast<int>(rng.below(3));
    Matrix v = random_in(src, rng);
    for (int j = 1; j < k; ++j) v = v.stack(random_in(pool[rng.below(pool.size())], rng));
    out.push_back({"spin of " + std::to_string(k), spin(ctx.R, v), true});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Memoized D_0 per (p, f, spec) for the d0 and local-criterion suites.

std::mutex d0_mu;
std::map<std::string, std::shared_ptr<const D0Result>> d0_memo;

std::shared_ptr<const D0Result> d0_for(const Field& F, const RhoBarSpec& spec) {
  const std::string key = to_string(F, spec);
  {
    std::lock_guard lock(d0_mu);
    auto it = d0_memo.find(key);
    if (it != d0_memo.end()) return it->second;
  }
  auto d0 = std::make_shared<const D0Result>(build_D0(F, serre_weights(F, spec)));
  std::lock_guard lock(d0_mu);
  return d0_memo.emplace(key, d0).first->second;
}

// ---------------------------------------------------------------------------
// Planning helpers.

using SigmaBody = std::function<void(const Field&, const WeightLabel&, const RunConfig&, PointResult&, Rng&)>;
using SpecBody = std::function<void(const Field&, const RhoBarSpec&, const RunConfig&, PointResult&, Rng&)>;

/// Every normalized sigma, then one seeded det-twisted sigma.
std::function<std::vector<Task>(const Field&, const RunConfig&)> per_sigma(SigmaBody body, bool twisted_sample = true) {
  return [body, twisted_sample](const Field& F, const RunConfig& config) {
    std::vector<Task> out;
    const auto sigmas = regular_sigmas(F);
    for (const auto& s : sigmas)
      out.push_back({F.p(), F.f(), to_string(s), [body, &F, s, config](PointResult& pt, Rng& rng) { body(F, s, config, pt, rng); }});
    if (twisted_sample && !sigmas.empty()) {
      Rng pick(point_seed(config.seed, "twist", F.p(), F.f(), ""));
      const WeightLabel& base = sigmas[pick.below(sigmas.size())];
      const long long c = 1 + static_cast<long long>(pick.below(F.q() - 2));
      const WeightLabel s = det_twist(F, base, c);
      out.push_back({F.p(), F.f(), to_string(s) + " (twist sample)",
                     [body, &F, s, config](PointResult& pt, Rng& rng) { body(F, s, config, pt, rng); }});
    }
    return out;
  };
}

std::function<std::vector<Task>(const Field&, const RunConfig&)> per_spec(SpecBody body) {
  return [body](const Field& F, const RunConfig& config) {
    std::vector<Task> out;
    for (const auto& spec : generic_specs(F))
      out.push_back({F.p(), F.f(), to_string(F, spec),
                     [body, &F, spec, config](PointResult& pt, Rng& rng) { body(F, spec, config, pt, rng); }});
    return out;
  };
}

// ---------------------------------------------------------------------------
// Suite bodies.

void rr_structure(const Field& F, int r, PointResult& pt) {
  const int p = F.p(), f = F.f();
  if (r == p - 1) {
    const auto& d = build_R_r(F, r);
    std::vector<int> s(f, 0);
    s[0] = p - 1;
    pt.check("R_{p-1} = V_{p-1}", d.R->dim() == p && is_irreducible(d.R) && identify(d.R) == make_label(F, s, 0),
             "dim " + std::to_string(d.R->dim()));
    return;
  }
  if (f == 1 && r == 0) {
    // The graded pieces do not form the socle filtration here; the
    // indecomposable summand with socle V_0 (x) det^{p-1} is smaller.
    try {
      build_R_r(F, 0);
      pt.check("extraction declines at f = 1, r = 0", false, "an indecomposable summand of dimension 2p was found");
    } catch (const ExtractionFailed& e) {
      pt.check("extraction declines at f = 1, r = 0", true, e.what());
    }
    return;
  }
  const auto& d = build_R_r(F, r);
  const WeightLabel t = rr_socle_label(F, r);
  pt.check("dim R_r = 2p", d.R->dim() == 2 * p, std::to_string(d.R->dim()));
  const auto soc = labels_of(socle(d.R));
  pt.check("socle", soc == std::vector<WeightLabel>{t}, to_string(soc));
  const auto cos = labels_of(cosocle(d.R));
  pt.check("cosocle", cos == std::vector<WeightLabel>{t}, to_string(cos));
  const auto middle = sorted(composition_factors(tensor(sym(F, p - 2 - r), sym(F, 1, 1 % f))));
  const auto layers = socle_series(d.R);
  const bool shape = layers.size() == 3 && layers[0] == std::vector<WeightLabel>{t} && layers[1] == middle &&
                     layers[2] == std::vector<WeightLabel>{t};
  pt.check("socle layers", shape, series_string(layers) + " expected middle [" + to_string(middle) + "]");
  const bool w = d.W && d.W->dim() == 2 * p - r - 1 && contains(*d.W, d.soc) && identify(quotient(*d.W)) == t;
  pt.check("W_r", w, d.W ? "dim " + std::to_string(d.W->dim()) : "absent");
  pt.witness["dim"] = d.R->dim();
  pt.witness["layers"] = series_string(layers);
}

Matrix factor_rows(const SigmaContext& ctx, int i, char which) {
  const auto& d = build_R_r(ctx.field(), ctx.r[i]);
  if (which == 's') return d.soc.rows();
  if (which == 'w') return d.W->rows();
  return Matrix::identity(ctx.field(), d.R->dim());
}

Matrix pattern_rows(const SigmaContext& ctx, const std::string& pat) {
  std::vector<Matrix> parts;
  for (int i = 0; i < ctx.f(); ++i) parts.push_back(factor_rows(ctx, i, pat[i]));
  return ctx.kron_rows(parts);
}


void lemma_inter(const Field& F, const WeightLabel& sigma, const RunConfig&, PointResult& pt, Rng&) {
  auto ctx = sigma_context(F, sigma);
  const int f = ctx->f();
  for (char w : {'w', 's'}) {
    const std::string name = w == 'w' ? "W" : "V (x) det";
    const std::string all(f, w);
    Matrix acc;
    for (int i = 0; i < f; ++i) {
      std::string pat(f, 'r');
      pat[i] = w;
      Matrix part = pattern_rows(*ctx, pat);
      acc = i == 0 ? part : subspace_meet_join(acc, part).first;
    }
    pt.check("(ii) " + name, same_span(acc, pattern_rows(*ctx, all)));
    for (int i = 0; i < f; ++i)
      for (int j = i + 1; j < f; ++j) {
        std::string a(f, 'r'), b(f, 'r'), both(f, 'r');
        a[i] = b[j] = both[i] = both[j] = w;
        Matrix U = pattern_rows(*ctx, a), V = pattern_rows(*ctx, b);
        auto [m, jn] = subspace_meet_join(U, V);
        pt.check("(i) " + name + " " + std::to_string(i) + "," + std::to_string(j), same_span(m, pattern_rows(*ctx, both)));
        pt.check("dimension formula " + name + " " + std::to_string(i) + "," + std::to_string(j),
                 m.rows() + jn.rows() == rank(U) + rank(V));
      }
  }
  pt.check("A is the tensor product of the W", same_span(pattern_rows(*ctx, std::string(f, 'w')), ctx->A.rows()));
  pt.witness["dim_R"] = ctx->R->dim();
  pt.witness["dim_A"] = ctx->A.dim();
}

void a_multfree(const Field& F, const WeightLabel& sigma, const RunConfig& config, PointResult& pt, Rng& rng) {
  auto ctx = sigma_context(F, sigma);
  pt.check("A multiplicity free", is_multiplicity_free(ctx->A_node));
  // Largest: submodules escaping A repeat some constituent.
  const int n = std::max(10, config.samples / 5);
  auto subs = structured_submodules(*ctx);
  for (auto& s : sampled_submodules(*ctx, n, rng)) subs.push_back(std::move(s));
  int escaping = 0, bad = 0;
  std::string first_bad;
  for (const auto& t : subs) {
    const bool inside = contains(ctx->A, t.M);
    escaping += !inside;
    if (is_multiplicity_free(sub_module(t.M)) != inside) {
      if (!bad++) first_bad = t.kind;
    }
  }
  pt.check("largest multiplicity-free submodule", bad == 0,
           std::to_string(subs.size()) + " submodules, " + std::to_string(escaping) + " not inside A" +
               (bad ? ", first failure " + first_bad : ""));
  pt.witness["structured"] = static_cast<int>(subs.size()) - n;
  pt.witness["sampled"] = n;
  pt.witness["escaping"] = escaping;
}

void aprime_mult(const Field& F, const WeightLabel& sigma, const RunConfig&, PointResult& pt, Rng&) {
  auto ctx = sigma_context(F, sigma);
  const int f = ctx->f();
  const int m = multiplicity(sub_module(ctx->Aprime), ctx->sigma);
  pt.check("multiplicity of sigma in A' is f+1", m == f + 1, std::to_string(m));
  for (int i = 0; i < f; ++i)
    for (int j = i + 1; j < f; ++j)
      pt.check("A'_" + std::to_string(i) + " meet A'_" + std::to_string(j) + " = sigma",
               equal(meet(ctx->Aprime_i[i], ctx->Aprime_i[j]), ctx->soc));
  pt.witness["dim_Aprime"] = ctx->Aprime.dim();
}

void aprime_layers(const Field& F, const WeightLabel& sigma, const RunConfig&, PointResult& pt, Rng&) {
  auto ctx = sigma_context(F, sigma);
  const std::vector<WeightLabel> just{ctx->sigma};
  json layers = json::array();
  for (int i = 0; i < ctx->f(); ++i) {
    const std::string tag = " A'_" + std::to_string(i);
    const Submodule& S = ctx->Aprime_i[i];
    Module Ai = sub_module(S);
    pt.check("socle" + tag, labels_of(socle(Ai)) == just);
    pt.check("cosocle" + tag, labels_of(cosocle(Ai)) == just);
    std::vector<WeightLabel> mid{ctx->mu[i].plus};
    if (ctx->mu[i].minus) mid.push_back(*ctx->mu[i].minus);
    const auto series = socle_series(Ai);
    const bool shape = series.size() == 3 && series[0] == just && series[1] == sorted(mid) && series[2] == just;
    pt.check("length-3 socle filtration" + tag, shape, series_string(series));
    Module Q = quotient(pull_down(S, Ai, meet(S, ctx->A)));
    pt.check("A'_i / (A'_i meet A) = sigma" + tag, Q->dim() == dimension(ctx->sigma) && identify(Q) == ctx->sigma);
    layers.push_back(series_string(series));
  }
  pt.witness["layers"] = layers;
}

void prop_socleB(const Field& F, const WeightLabel& sigma, const RunConfig&, PointResult& pt, Rng&) {
  auto ctx = sigma_context(F, sigma);
  Module Q = quotient(ctx->A);
  const auto soc = labels_of(socle(Q));
  pt.check("soc(R/A) = sigma^f", soc == std::vector<WeightLabel>(ctx->f(), ctx->sigma), to_string(soc));
  Submodule Bpre = preimage(ctx->A, socle_sub(Q));
  pt.check("pullback of soc(R/A) = A + A'", equal(Bpre, ctx->B));
  pt.witness["dim_R/A"] = Q->dim();
  pt.witness["dim_B"] = Bpre.dim();
}

void b_no_sigma(const Field& F, const WeightLabel& sigma, const RunConfig&, PointResult& pt, Rng&) {
  auto ctx = sigma_context(F, sigma);
  Module Bn = sub_module(ctx->B);
  Module Q = quotient(pull_down(ctx->B, Bn, ctx->Aprime));
  const int mq = multiplicity(Q, ctx->sigma), mb = multiplicity(Bn, ctx->sigma);
  pt.check("B/A' has no constituent sigma", mq == 0, std::to_string(mq));
  pt.check("multiplicity of sigma in B is f+1", mb == ctx->f() + 1, std::to_string(mb));
  pt.witness["dim_B/A'"] = Q->dim();
}

void inclusion_criteria(const Field& F, const WeightLabel& sigma, const RunConfig& config, PointResult& pt, Rng& rng) {
  auto ctx = sigma_context(F, sigma);
  auto subs = structured_submodules(*ctx);
  const int structured = static_cast<int>(subs.size());
  for (auto& s : sampled_submodules(*ctx, config.samples, rng)) subs.push_back(std::move(s));
  int hyp = 0, hyp_in_B = 0, counter = 0;
  std::string first;
  for (const auto& t : subs) {
    if (!inclusion_criterion(*ctx, t.M)) continue;
    ++hyp;
    hyp_in_B += contains(ctx->B, t.M);
    if (!contains(ctx->A, t.M) && !counter++) first = t.kind;
  }
  for (int i = 0; i < ctx->f(); ++i)
    pt.check("A'_" + std::to_string(i) + " fails the hypothesis", !inclusion_criterion(*ctx, ctx->Aprime_i[i]));
  pt.check("hypothesis implies M inside A", counter == 0,
           std::to_string(hyp) + " of " + std::to_string(subs.size()) + " satisfy the hypothesis" +
               (counter ? ", first counterexample " + first : ""));
  pt.witness["structured"] = structured;
  pt.witness["sampled"] = config.samples;
  pt.witness["hypothesis"] = hyp;
  pt.witness["hypothesis_inside_B"] = hyp_in_B;
  pt.witness["counterexamples"] = counter;
}

void alternative(const Field& F, const WeightLabel& sigma, const RunConfig& config, PointResult& pt, Rng& rng) {
  auto ctx = sigma_context(F, sigma);
  auto subs = structured_submodules(*ctx);
  const int structured = static_cast<int>(subs.size());
  for (auto& s : sampled_submodules(*ctx, config.samples, rng)) subs.push_back(std::move(s));
  int alt = 0, counter = 0;
  std::string first;
  for (const auto& t : subs) {
    if (!is_alternative(*ctx, t.M)) continue;
    ++alt;
    if (!inclusion_criterion(*ctx, t.M) && !counter++) first = t.kind;
  }
  pt.check("sigma is alternative", is_alternative(*ctx, ctx->soc));
  pt.check("R_sigma is not alternative", !is_alternative(*ctx, whole(ctx->R)));
  pt.check("alternative implies M meet A' inside A", counter == 0,
           std::to_string(alt) + " of " + std::to_string(subs.size()) + " alternative" +
               (counter ? ", first counterexample " + first : ""));
  pt.witness["structured"] = structured;
  pt.witness["sampled"] = config.samples;
  pt.witness["alternative"] = alt;
  pt.witness["counterexamples"] = counter;
}

void ext_basis(const Field& F, const WeightLabel& sigma, const RunConfig&, PointResult& pt, Rng&) {
  auto ctx = sigma_context(F, sigma);
  const int f = ctx->f();
  const Ext1Result E = ext1(ctx->sigma, ctx->A_node);
  pt.check("dim Ext1(sigma, A) = f", E.dim == f, std::to_string(E.dim));
  Matrix flat;
  for (int i = 0; i < f; ++i) {
    Matrix c = ext_coordinates_of_x(*ctx, i);
    Matrix row(F, 1, c.rows() * c.cols());
    std::copy(c.data().begin(), c.data().end(), row.row(0));
    flat = i == 0 ? row : flat.stack(row);
    pt.check("X_" + std::to_string(i) + " is not split", !is_split(x_class(*ctx, i)));
  }
  pt.check("X_i independent in Hom(sigma, R/A)", rank(flat) == f);
  json homs = json::array();
  for (int i = 0; i < f; ++i) {
    Module Xi = sub_module(ctx->X_total(i));
    for (int j = 0; j < f; ++j) {
      std::vector<WeightLabel> mus{ctx->mu[j].plus};
      if (ctx->mu[j].minus) mus.push_back(*ctx->mu[j].minus);
      for (const auto& mu : mus) {
        const int h = hom_dim(Xi, build_weight(F, mu));
        pt.check("Hom(X_" + std::to_string(i) + ", " + to_string(mu) + ") zero iff i = j", (h == 0) == (i == j),
                 std::to_string(h));
        homs.push_back({i, j, to_string(mu), h});
      }
    }
  }
  pt.witness["hom"] = homs;
}

/// Hom(X', C) -> Hom(B, C) by restriction along B -> X'.
bool restriction_iso(const ExtClass& E, const Module& C) {
  const Field& F = C->field();
  auto H = hom_space(E.X, C);
  const int hb = hom_dim(E.B, C);
  if (static_cast<int>(H.size()) != hb) return false;
  if (H.empty()) return true;
  Matrix flat(F, static_cast<int>(H.size()), E.B->dim() * C->dim());
  for (size_t k = 0; k < H.size(); ++k) {
    Matrix c = E.incl * H[k];
    std::copy(c.data().begin(), c.data().end(), flat.row(static_cast<int>(k)));
  }
  return rank(flat) == hb;
}

void baer(const Field& F, const WeightLabel& sigma, const RunConfig&, PointResult& pt, Rng& rng) {
  auto ctx = sigma_context(F, sigma);
  const int f = ctx->f();
  int triples = 0, valid = 0, counter = 0;
  json cases = json::array();
  auto run_triple = [&](const std::string& name, const ExtClass& X, const ExtClass& X2, const WeightLabel& C) {
    ++triples;
    Module Cm = build_weight(F, C);
    const bool h1 = hom_dim(X.X, Cm) == 0, h2 = restriction_iso(X2, Cm);
    bool ok = true;
    if (h1 && h2) {
      ++valid;
      ExtClass Y = baer_sum(X, X2);
      check_exact(Y);
      ok = hom_dim(Y.X, Cm) == 0;
      counter += !ok;
    }
    cases.push_back({{"case", name}, {"C", to_string(C)}, {"hypotheses", h1 && h2}, {"conclusion", ok}});
  };
  auto mus = [&](int i) {
    std::vector<WeightLabel> out{ctx->mu[i].plus};
    if (ctx->mu[i].minus) out.push_back(*ctx->mu[i].minus);
    return out;
  };
  if (f == 1) {
    const ExtClass X0 = x_class(*ctx, 0);
    const ExtClass split = split_extension(X0.A, X0.B);
    for (const auto& C : mus(0)) {
      const Elem c = rng.nonzero(F);
      run_triple(std::to_string(c) + "*X_0 + split", scale(X0, c), split, C);
    }
  } else {
    std::vector<ExtClass> X;
    for (int i = 0; i < f; ++i) X.push_back(x_class(*ctx, i));
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j) {
        if (i == j) continue;
        for (const auto& C : mus(i)) {
          const Elem c = rng.nonzero(F);
          run_triple(std::to_string(c) + "*X_" + std::to_string(i) + " + X_" + std::to_string(j), scale(X[i], c), X[j], C);
        }
      }
  }
  pt.check("Hom(X + X', C) = 0 under the hypotheses", counter == 0,
           std::to_string(valid) + " of " + std::to_string(triples) + " triples satisfy the hypotheses");
  pt.witness["triples"] = triples;
  pt.witness["valid"] = valid;
  pt.witness["counterexamples"] = counter;
  pt.witness["cases"] = cases;
}

void icombin_enumeration(PointResult& pt) {
  const auto I1 = enumerate_I(1);
  pt.check("|I| = 3 at f = 1", I1.size() == 3, std::to_string(I1.size()));
  json sizes = json::object();
  for (int f = 1; f <= 3; ++f) {
    auto gen = enumerate_I(f), brute = enumerate_I_bruteforce(f);
    std::sort(gen.begin(), gen.end());
    std::sort(brute.begin(), brute.end());
    const std::string tag = " f=" + std::to_string(f);
    pt.check("generator equals checker" + tag, gen == brute,
             std::to_string(gen.size()) + " vs " + std::to_string(brute.size()));
    pt.check("identity in I" + tag, std::find(gen.begin(), gen.end(), identity_lambda(f)) != gen.end());
    long long pairs = 0, expected = 0, failures = 0;
    for (const auto& lam : gen) {
      const auto S = S_of(lam);
      expected += 1LL << S.size();
      for (unsigned mask = 0; mask < (1u << S.size()); ++mask) {
        std::vector<int> Sp;
        for (size_t k = 0; k < S.size(); ++k)
          if (mask >> k & 1) Sp.push_back(S[k]);
        try {
          Lambda mu = unique_compatible(lam, Sp);
          failures += !(S_of(mu) == Sp && compatible(mu, lam) && in_I(mu));
        } catch (const std::logic_error&) {
          ++failures;
        }
        ++pairs;
      }
    }
    pt.check("one weight per subset" + tag, failures == 0 && pairs == expected,
             std::to_string(pairs) + " (lambda, S') pairs, " + std::to_string(failures) + " failures");
    sizes[std::to_string(f)] = gen.size();
  }
  pt.witness["sizes"] = sizes;
}

std::vector<int> sym_diff(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void icombin_auxiliary(const Field& F, const RhoBarSpec& spec, const RunConfig&, PointResult& pt, Rng&) {
  const auto D = serre_weights(F, spec);
  const auto st = check_serre_structure(F, D);
  for (const auto& c : st.checks) pt.check(c.name, c.ok, c.detail);
  int factored = 0;
  for (const auto& [s, sc] : st.complements) {
    for (const auto& c : auxiliary_checks(F, s, sc)) pt.check(c.name, c.ok, c.detail);
    auto ctx = sigma_context(F, s);
    const auto cmap = label_constituents(*ctx);
    const auto* e = cmap.by_label(sc);
    if (!e) continue;
    const auto Sc = S_of(e->lam);
    const auto family = predicted_family(e->lam);
    bool ok = true;
    std::string detail;
    for (const auto& mu : family) {
      std::vector<int> rest;
      const auto Sm = S_of(mu);
      std::set_difference(Sc.begin(), Sc.end(), Sm.begin(), Sm.end(), std::back_inserter(rest));
      const Lambda muc = unique_compatible(e->lam, rest);
      try {
        const Lambda nu = factor(mu, muc);
        ++factored;
        if (!in_I(nu) || compose(nu, mu) != muc || S_of(nu) != sym_diff(Sm, S_of(muc))) {
          ok = false;
          detail = to_string(mu) + " -> " + to_string(muc);
        }
      } catch (const NotInI&) {
        ok = false;
        detail = "nu outside I for " + to_string(mu) + " -> " + to_string(muc);
      }
    }
    pt.check("mu^c = nu o mu with nu in I " + to_string(s), ok, detail);
  }
  pt.witness["D"] = to_string(D);
  pt.witness["factorizations"] = factored;
}

void i_sigma_tau_suite(const Field& F, const WeightLabel& sigma, const RunConfig&, PointResult& pt, Rng&) {
  auto ctx = sigma_context(F, sigma);
  const auto cmap = label_constituents(*ctx);
  pt.check("constituents of A_sigma labelled by I", cmap.ok, cmap.detail);
  if (!cmap.ok) return;
  int hom_compared = 0;
  json rows = json::array();
  for (const auto& e : cmap.entries) {
    const std::string tag = " " + to_string(e.lam);
    auto info = i_sigma_tau_info(*ctx, e.label);
    pt.check("exists" + tag, info.has_value());
    if (!info) continue;
    auto factors = sorted(info->factors);
    pt.check("multiplicity free" + tag, std::adjacent_find(factors.begin(), factors.end()) == factors.end());
    pt.check("sigma once" + tag, std::count(factors.begin(), factors.end(), ctx->sigma) == 1);
    pt.check("cosocle tau" + tag, labels_of(cosocle(sub_module(info->sub))) == std::vector<WeightLabel>{e.label});
    const auto pred = predicted_constituents(F.p(), ctx->r, e.lam);
    std::vector<WeightLabel> mapped;
    for (const auto& lam : pred.genuine)
      if (const auto* m = cmap.by_lambda(lam)) mapped.push_back(m->label);
    pt.check("constituents as predicted" + tag, sorted(mapped) == factors,
             to_string(sorted(mapped)) + " vs " + to_string(factors));
    pt.check("at most 2^|S| constituents" + tag,
             factors.size() + pred.fakes == (1u << S_of(e.lam).size()));
    if (auto h = i_sigma_tau(*ctx, e.label, true)) {
      ++hom_compared;
      pt.check("hom image agrees" + tag, equal(*h, info->sub));
    }
    rows.push_back({to_string(e.lam), to_string(e.label), static_cast<int>(factors.size())});
  }
  pt.witness["constituents"] = rows;
  pt.witness["hom_compared"] = hom_compared;
}

void serre_weights_suite(const Field& F, const RhoBarSpec& spec, const RunConfig&, PointResult& pt, Rng& rng) {
  const int f = F.f();
  std::vector<WeightLabel> D;
  try {
    D = serre_weights(F, spec);
  } catch (const std::exception& e) {
    pt.check("recipe postconditions", false, e.what());
    return;
  }
  pt.check("|D| = 2^f", D.size() == (1u << f), std::to_string(D.size()));
  bool regular = true;
  for (const auto& s : D) regular = regular && is_regular(F, s) && dimension(s) >= 2;
  pt.check("regular of dimension >= 2", regular, to_string(D));
  const auto st = check_serre_structure(F, D);
  pt.check("closed under I-constituents", st.closed);
  pt.check("every sigma has a complement", st.complements.size() == D.size());
  if (f == 1) pt.check("classical pair", D == classical_pair(F, spec), to_string(classical_pair(F, spec)));
  pt.check("J and its complement agree", serre_weights(F, spec, true) == D);
  const long long c = 1 + static_cast<long long>(rng.below(F.q() - 2));
  pt.check("twist equivariance c=" + std::to_string(c), twist_equivariance(F, spec, c));
  pt.check("twist equivariance c=q-1", twist_equivariance(F, spec, F.q() - 1));
  json ext = json::array();
  for (const auto& s : D) {
    auto ctx = sigma_context(F, s);
    for (const auto& t : D) {
      if (s == t) continue;
      const int e1 = ext1_dim(F, t, s), e2 = ext1_dim(F, s, t);
      const std::string tag = " " + to_string(t) + " -> " + to_string(s);
      pt.check("Ext1 symmetric and at most 1" + tag, e1 <= 1 && (e1 == 0) == (e2 == 0),
               std::to_string(e1) + "," + std::to_string(e2));
      if (e1 > 0) {
        auto info = i_sigma_tau_info(*ctx, t);
        pt.check("I(sigma, tau) has length 2" + tag, info && info->factors.size() == 2);
      }
      ext.push_back({to_string(t), to_string(s), e1});
    }
  }
  pt.witness["D"] = to_string(D);
  pt.witness["ext1"] = ext;
}

void d0_suite(const Field& F, const RhoBarSpec& spec, const RunConfig&, PointResult& pt, Rng&) {
  auto d0 = d0_for(F, spec);
  for (const auto& c : check_D0(*d0)) pt.check(c.name, c.ok, c.detail);
  json parts = json::array();
  for (const auto& part : d0->parts) parts.push_back({to_string(part.sigma), part.D.dim()});
  pt.witness["parts"] = parts;
  pt.witness["dim_D0"] = d0->D0.dim();
}

void local_suite(const Field& F, const RhoBarSpec& spec, const RunConfig&, PointResult& pt, Rng&) {
  auto d0 = d0_for(F, spec);
  const auto lc = local_criterion(*d0, d0->D0);
  std::string dims;
  for (const auto& [t, h] : lc.hom_dims) dims += to_string(t) + ":" + std::to_string(h) + " ";
  pt.check("local criterion holds for D0", lc.holds, dims);
  const auto ens = one_step_enlargements(*d0);
  int rejected = 0, witnessed = 0;
  for (const auto& W : ens) {
    const auto l = local_criterion(*d0, W);
    rejected += !l.holds;
    int mx = 0;
    for (const auto& hd : l.hom_dims) mx = std::max(mx, hd.second);
    witnessed += mx >= 2;
  }
  pt.check("every one-step enlargement is rejected", rejected == static_cast<int>(ens.size()) && witnessed == rejected,
           std::to_string(rejected) + " of " + std::to_string(ens.size()) + " rejected, " + std::to_string(witnessed) +
               " with a Hom dimension >= 2");
  pt.check("enlargements exist", !ens.empty());
  pt.witness["enlargements"] = static_cast<int>(ens.size());
}

std::vector<SuiteInfo> make_registry() {
  std::vector<SuiteInfo> reg;
  reg.push_back({"rr-structure", "R_r has dimension 2p, socle = cosocle = V_r (x) det^{p-1-r} and three socle layers; W_r is the kernel of the cosocle map", "all 0 <= r <= p-1",
                 [](const Field& F, const RunConfig&) {
                   std::vector<Task> out;
                   for (int r = 0; r <= F.p() - 1; ++r)
                     out.push_back({F.p(), F.f(), "r=" + std::to_string(r),
                                    [&F, r](PointResult& pt, Rng&) { rr_structure(F, r, pt); }});
                   return out;
                 }});
  const std::string all_sigma = "all normalized regular sigma of dim >= 2, plus one seeded det twist";
  reg.push_back({"lemma-inter", "intersections of the W_{r_i} (x) R and V_{r_i} (x) R patterns inside R_sigma; A_sigma is the tensor product of the W_{r_i}", all_sigma, per_sigma(lemma_inter)});
  reg.push_back({"a-multfree", "A_sigma is the largest multiplicity-free submodule of R_sigma", all_sigma + "; maximality on structured and max(10, samples/5) random spins",
                 per_sigma(a_multfree)});
  reg.push_back({"aprime-mult", "sigma has multiplicity f+1 in A'_sigma and A'_{sigma,i} meet A'_{sigma,j} = sigma", all_sigma, per_sigma(aprime_mult)});
  reg.push_back({"aprime-layers", "A'_{sigma,i} has socle and cosocle sigma and socle layers sigma, mu_i^+ + mu_i^-, sigma", all_sigma,
                 per_sigma(aprime_layers)});
  reg.push_back({"prop-socleB", "soc(R_sigma / A_sigma) = sigma^f, with pullback B_sigma = A_sigma + A'_sigma", all_sigma, per_sigma(prop_socleB)});
  reg.push_back({"b-no-sigma", "sigma does not occur in B_sigma / A'_sigma", all_sigma, per_sigma(b_no_sigma)});
  reg.push_back({"inclusion-criteria", "M meet A'_sigma inside A_sigma implies M inside A_sigma",
                 all_sigma + "; structured submodules plus `samples` random spins of 1-3 vectors", per_sigma(inclusion_criteria)});
  reg.push_back({"ext-basis", "dim Ext1(sigma, A_sigma) = f with basis X_i, and Hom(X_i, mu_j^+-) = 0 iff i = j", all_sigma, per_sigma(ext_basis)});
  reg.push_back({"alternative", "alternative submodules M satisfy M meet A'_sigma inside A_sigma",
                 all_sigma + "; structured submodules plus `samples` random spins of 1-3 vectors", per_sigma(alternative)});
  reg.push_back({"baer", "Hom(X, C) = 0 and Hom(X', C) = Hom(B, C) imply Hom(X + X', C) = 0", all_sigma + "; X = c X_i, X' = X_j (i != j), C = mu_i^+-", per_sigma(baer)});
  reg.push_back({"icombin", "index set I, unique compatible element per subset of S(lambda), and the complement properties of I(sigma, sigma^c)",
                 "f <= 3 exhaustive; every generic tame parameter with eta = 0",
                 [](const Field& F, const RunConfig& config) {
                   std::vector<Task> out{{F.p(), F.f(), "enumeration", [](PointResult& pt, Rng&) { icombin_enumeration(pt); }}};
                   for (auto& t : per_spec(icombin_auxiliary)(F, config)) out.push_back(std::move(t));
                   return out;
                 }});
  reg.push_back({"i-sigma-tau", "I(sigma, tau) engine versus predicted constituents",
                 "every constituent tau of A_sigma, all normalized sigma", per_sigma(i_sigma_tau_suite, false)});
  reg.push_back({"serre-weights", "Serre-weight recipe postconditions", "every generic tame parameter with eta = 0 (both niveaux)",
                 per_spec(serre_weights_suite)});
  reg.push_back({"d0", "D0 has socle the Serre weights, each once; Ext1(tau, sigma) = Ext1(tau, D_{0,sigma}); D_{0,sigma} is alternative with Ext1(sigma, D_{0,sigma}) = 0", "every generic tame parameter with eta = 0",
                 per_spec(d0_suite)});
  reg.push_back({"local-criterion", "D0 satisfies the one-dimensional Hom criterion and no one-step enlargement does", "every generic tame parameter with eta = 0; every one-step enlargement",
                 per_spec(local_suite)});
  return reg;
}

}  // namespace

void PointResult::check(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass, detail});
  ok = ok && pass;
}

bool SuiteResult::ok() const {
  return std::all_of(points.begin(), points.end(), [](const PointResult& p) { return p.ok; });
}

bool Report::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

const SuiteResult* Report::suite(const std::string& id) const {
  for (const auto& s : suites)
    if (s.id == id) return &s;
  return nullptr;
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg = make_registry();
  return reg;
}

std::uint64_t point_seed(std::uint64_t seed, const std::string& suite, int p, int f, const std::string& point) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  for (char c : suite) mix(static_cast<unsigned char>(c));
  mix(p);
  mix(f);
  for (char c : point) mix(static_cast<unsigned char>(c));
  return h;
}

std::vector<WeightLabel> regular_sigmas(const Field& F) {
  std::vector<WeightLabel> out;
  const int p = F.p(), f = F.f();
  std::vector<int> s(f, 0);
  while (true) {
    int k = f - 1;
    while (k >= 0 && s[k] == p - 2) s[k--] = 0;
    if (k < 0) break;
    ++s[k];
    out.push_back(normalized_label(F, s));
  }
  return out;
}

void validate(const RunConfig& c) {
  if (c.ps.empty() || c.fs.empty()) throw ConfigError("empty p or f list");
  for (int p : c.ps)
    if (p < 3 || !is_prime(p)) throw ConfigError("p must be an odd prime, got " + std::to_string(p));
  for (int p : c.ps)
    for (int f : c.fs) {
      if (f < 1) throw ConfigError("f must be positive");
      long long q = 1;
      for (int i = 0; i < f; ++i) q *= p;
      if (q > 256) throw ConfigError("q = " + std::to_string(q) + " is too large");
    }
  if (c.samples < 1) throw ConfigError("samples must be at least 1");
  if (c.jobs < 1) throw ConfigError("jobs must be at least 1");
  for (const auto& s : c.suites) {
    const auto& reg = suite_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const SuiteInfo& i) { return i.id == s; }))
      throw ConfigError("unknown suite " + s);
  }
}

Report run(const RunConfig& config) {
  validate(config);
  const auto t0 = Clock::now();
  reset_caches();
  {
    std::lock_guard lock(d0_mu);
    d0_memo.clear();
  }
  std::shared_ptr<FileCache> cache;
  if (!config.cache_dir.empty()) cache = std::make_shared<FileCache>(config.cache_dir);
  set_rr_store(cache);

  Report report;
  report.config = config;
  struct Slot {
    size_t suite;
    Task task;
    std::string id;
  };
  std::vector<Slot> slots;
  for (const auto& info : suite_registry()) {
    if (!config.suites.empty() && std::find(config.suites.begin(), config.suites.end(), info.id) == config.suites.end())
      continue;
    report.suites.push_back({info.id, info.statement, info.scope, {}, 0});
    for (int p : config.ps)
      for (int f : config.fs)
        for (auto& t : info.plan(Field::get(p, f), config)) slots.push_back({report.suites.size() - 1, std::move(t), info.id});
  }
  std::vector<PointResult> results(slots.size());
  auto execute = [&](size_t k) {
    const auto& slot = slots[k];
    PointResult& pt = results[k];
    pt.p = slot.task.p;
    pt.f = slot.task.f;
    pt.point = slot.task.point;
    pt.seed = point_seed(config.seed, slot.id, pt.p, pt.f, pt.point);
    Rng rng(pt.seed);
    const auto start = Clock::now();
    try {
      slot.task.body(pt, rng);
    } catch (const std::exception& e) {
      pt.check("completed without error", false, e.what());
    }
    pt.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  };
  if (config.jobs == 1) {
    for (size_t k = 0; k < slots.size(); ++k) execute(k);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < config.jobs; ++j)
      pool.emplace_back([&] {
        for (size_t k; (k = next++) < slots.size();) execute(k);
      });
    for (auto& t : pool) t.join();
  }
  for (size_t k = 0; k < slots.size(); ++k) {
    auto& s = report.suites[slots[k].suite];
    s.seconds += results[k].seconds;
    s.points.push_back(std::move(results[k]));
  }
  set_rr_store(nullptr);
  report.cache = {{"enabled", static_cast<bool>(cache)}, {"sigma_contexts", sigma_context_count()}};
  if (cache) {
    const auto st = cache->stats();
    report.cache["dir"] = cache->dir().string();
    report.cache["hits"] = st.hits;
    report.cache["misses"] = st.misses;
    report.cache["stores"] = st.stores;
    report.cache["evictions"] = st.evictions;
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

json to_json(const Report& report, bool include_runtime) {
  const auto& c = report.config;
  json j;
  j["schema"] = Report::kSchema;
  j["config"] = {{"p", c.ps}, {"f", c.fs}, {"suites", c.suites}, {"samples", c.samples}, {"seed", hex(c.seed)}};
  j["ok"] = report.ok();
  json suites = json::array();
  for (const auto& s : report.suites) {
    json points = json::array();
    for (const auto& pt : s.points) {
      json checks = json::array();
      for (const auto& ch : pt.checks) checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
      points.push_back({{"p", pt.p},
                        {"f", pt.f},
                        {"point", pt.point},
                        {"seed", hex(pt.seed)},
                        {"ok", pt.ok},
                        {"checks", checks},
                        {"witness", pt.witness}});
    }
    suites.push_back({{"id", s.id}, {"statement", s.statement}, {"scope", s.scope}, {"ok", s.ok()}, {"points", points}});
  }
  j["suites"] = suites;
  if (include_runtime) {
    json timing = json::object();
    for (const auto& s : report.suites) {
      json pts = json::array();
      for (const auto& pt : s.points) pts.push_back(pt.seconds);
      timing[s.id] = {{"seconds", s.seconds}, {"points", pts}};
    }
    j["runtime"] = {{"seconds", report.seconds}, {"suites", timing}, {"cache", report.cache}, {"jobs", c.jobs}};
  }
  return j;
}

}  // namespace gl2wb
