#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/hom.hpp"

namespace gl2wb {

namespace {

Matrix kron_all(const std::vector<Matrix>& parts) {
  Matrix out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out = kron(out, parts[i]);
  return out;
}

std::shared_ptr<SigmaContext> build_base(const Field& F, const WeightLabel& base) {
  auto ctx = std::make_shared<SigmaContext>();
  ctx->F = &F;
  ctx->sigma = ctx->base = base;
  ctx->r = base.s;
  const int f = F.f();
  std::vector<const RrData*> rr;
  for (int i = 0; i < f; ++i) {
    rr.push_back(&build_R_r(F, ctx->r[i]));
    ctx->factors.push_back(frob_twist(rr[i]->R, i));
  }
  ctx->R = tensor(ctx->factors);
  auto part = [&](int i, char which) -> Matrix {
    switch (which) {
      case 's':
        return rr[i]->soc.rows();
      case 'w':
        return rr[i]->W->rows();
      default:
        return Matrix::identity(F, rr[i]->R->dim());
    }
  };
  auto product = [&](const std::string& pattern) {
    std::vector<Matrix> parts;
    for (int i = 0; i < f; ++i) parts.push_back(part(i, pattern[i]));
    return make_sub(ctx->R, kron_all(parts));
  };
  ctx->soc = product(std::string(f, 's'));
  ctx->A = product(std::string(f, 'w'));
  ctx->Aprime = zero_sub(ctx->R);
  for (int i = 0; i < f; ++i) {
    std::string pat(f, 's');
    pat[i] = 'r';
    ctx->Aprime_i.push_back(product(pat));
    ctx->Aprime = sum(ctx->Aprime, ctx->Aprime_i.back());
    std::string inter(f, 'r');
    inter[i] = 'w';
    ctx->Ainter.push_back(product(inter));
  }
  ctx->B = sum(ctx->A, ctx->Aprime);
  ctx->AmeetAprime = meet(ctx->A, ctx->Aprime);
  ctx->A_node = sub_module(ctx->A);
  ctx->AmA_node = sub_module(ctx->AmeetAprime);
  ctx->R_mod_soc = quotient(ctx->soc);
  Submodule fil1 = ctx->soc;
  for (const auto& piece : socle(ctx->R_mod_soc)) {
    Submodule pre = preimage(ctx->soc, piece.sub);
    ctx->gr1.push_back({piece.label, piece.mult, pre});
    fil1 = sum(fil1, pre);
  }
  ctx->fil1 = fil1;
  ctx->mu = mu_weights(F, base);
  return ctx;
}

Submodule rebase(const Submodule& S, const Module& R) { return Submodule{R, S.basis}; }

std::shared_ptr<const SigmaContext> twisted(const std::shared_ptr<const SigmaContext>& b, const WeightLabel& sigma,
                                            int twist) {
  if (twist == 0) return b;
  const Field& F = *b->F;
  auto ctx = std::make_shared<SigmaContext>(*b);
  ctx->sigma = sigma;
  ctx->twist = twist;
  ctx->R = det_twist(b->R, twist);
  for (auto* S : {&ctx->soc, &ctx->A, &ctx->Aprime, &ctx->B, &ctx->AmeetAprime, &ctx->fil1}) *S = rebase(*S, ctx->R);
  for (auto& S : ctx->Aprime_i) S = rebase(S, ctx->R);
  for (auto& S : ctx->Ainter) S = rebase(S, ctx->R);
  for (auto& g : ctx->gr1) {
    g.label = det_twist(F, g.label, twist);
    g.preimage = rebase(g.preimage, ctx->R);
  }
  for (auto& m : ctx->mu) {
    m.plus = det_twist(F, m.plus, twist);
    if (m.minus) m.minus = det_twist(F, *m.minus, twist);
  }
  ctx->A_node = det_twist(b->A_node, twist);
  ctx->AmA_node = det_twist(b->AmA_node, twist);
  ctx->R_mod_soc = det_twist(b->R_mod_soc, twist);
  return ctx;
}

std::mutex registry_mu;
std::map<std::tuple<int, int, WeightLabel>, std::shared_ptr<const SigmaContext>>& registry() {
  static std::map<std::tuple<int, int, WeightLabel>, std::shared_ptr<const SigmaContext>> r;
  return r;
}

}  // namespace

Matrix SigmaContext::kron_rows(const std::vector<Matrix>& parts) const { return kron_all(parts); }

Submodule SigmaContext::X_total(int i) const { return sum(AmeetAprime, Aprime_i.at(i)); }

std::shared_ptr<const SigmaContext> sigma_context(const Field& F, const WeightLabel& sigma) {
  if (!is_regular(F, sigma)) throw UnsupportedSocle(to_string(sigma) + " is not regular");
  if (dimension(sigma) < 2) throw UnsupportedSocle(to_string(sigma) + " is one-dimensional");
  const auto key = std::make_tuple(F.p(), F.f(), sigma);
  {
    std::lock_guard lock(registry_mu);
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
  }
  Normalized n = normalize(F, sigma);
  std::shared_ptr<const SigmaContext> base;
  const auto bkey = std::make_tuple(F.p(), F.f(), n.label);
  {
    std::lock_guard lock(registry_mu);
    auto it = registry().find(bkey);
    if (it != registry().end()) base = it->second;
  }
  if (!base) {
    base = build_base(F, n.label);
    std::lock_guard lock(registry_mu);
    base = registry().emplace(bkey, base).first->second;
  }
  auto ctx = twisted(base, sigma, n.twist);
  std::lock_guard lock(registry_mu);
  return registry().emplace(key, ctx).first->second;
}

size_t sigma_context_count() {
  std::lock_guard lock(registry_mu);
  return registry().size();
}

void clear_sigma_contexts() {
  std::lock_guard lock(registry_mu);
  registry().clear();
}

std::vector<WeightLabel> gr1_labels(const SigmaContext& ctx, const Submodule& M) {
  std::vector<WeightLabel> out;
  const int base = meet(M, ctx.soc).dim();
  for (const auto& g : ctx.gr1) {
    int extra = meet(M, g.preimage).dim() - base;
    for (int k = 0; k < extra / dimension(g.label); ++k) out.push_back(g.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_alternative(const SigmaContext& ctx, const Submodule& M) {
  auto labels = gr1_labels(ctx, M);
  auto has = [&](const WeightLabel& L) { return std::find(labels.begin(), labels.end(), L) != labels.end(); };
  for (const auto& m : ctx.mu) {
    if (m.minus) {
      if (has(m.plus) && has(*m.minus)) return false;
    } else if (has(m.plus)) {
      return false;
    }
  }
  return true;
}

bool inclusion_criterion(const SigmaContext& ctx, const Submodule& M) { return contains(ctx.A, meet(M, ctx.Aprime)); }

ExtClass x_class(const SigmaContext& ctx, int i) {
  const Field& F = ctx.field();
  Submodule T = ctx.X_total(i);
  ExtClass E;
  E.X = sub_module(T);
  E.B = ctx.AmA_node;
  E.A = build_weight(F, ctx.sigma);
  E.incl = restrict_to(T, ctx.AmeetAprime.rows());
  auto H = hom_space(E.X, E.A);
  if (H.empty()) throw std::logic_error("X_i has no quotient sigma");
  // Combination of H vanishing on B.
  Matrix onB(F, static_cast<int>(H.size()), E.B->dim() * E.A->dim());
  for (size_t k = 0; k < H.size(); ++k) {
    Matrix c = E.incl * H[k];
    std::copy(c.data().begin(), c.data().end(), onB.row(static_cast<int>(k)));
  }
  Matrix coeffs = left_kernel(onB);
  if (coeffs.rows() != 1) throw std::logic_error("X_i: maps to sigma killing B are not 1-dimensional");
  Matrix proj(F, E.X->dim(), E.A->dim());
  for (size_t k = 0; k < H.size(); ++k) proj = proj + H[k].scaled(coeffs(0, static_cast<int>(k)));
  E.proj = proj;
  check_exact(E);
  return E;
}

Matrix ext_coordinates_of_x(const SigmaContext& ctx, int i) {
  const Field& F = ctx.field();
  Module Q = quotient(ctx.A);
  Submodule inQ = make_sub(Q, project(ctx.A, sum(ctx.A, ctx.Aprime_i.at(i)).rows()));
  auto H = hom_space(build_weight(F, ctx.sigma), sub_module(inQ));
  if (H.size() != 1) throw std::logic_error("(A + A'_i)/A is not a single copy of sigma");
  return H[0] * inQ.rows();
}

}  // namespace gl2wb
