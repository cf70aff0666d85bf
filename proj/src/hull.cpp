#include <algorithm>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/hom.hpp"
#include "gl2wb/rng.hpp"

namespace gl2wb {

namespace {

void require_hull(const Field& F, const WeightLabel& L) {
  if (!is_regular(F, L) || dimension(L) < 2)
    throw UnsupportedSocle("no injective hull model for " + to_string(L));
}

}  // namespace

Hull injective_hull_embed(const Module& M, std::uint64_t seed) {
  const Field& F = M->field();
  auto soc = socle(M);
  Hull h;
  std::vector<std::vector<Matrix>> homs;
  std::vector<Module> parts;
  for (const auto& piece : soc) {
    require_hull(F, piece.label);
    auto ctx = sigma_context(F, piece.label);
    auto H = hom_space(M, ctx->R);
    if (static_cast<int>(H.size()) < piece.mult) throw std::logic_error("injective hull: too few maps");
    for (int k = 0; k < piece.mult; ++k) {
      homs.push_back(H);
      parts.push_back(ctx->R);
      h.parts.push_back(piece.label);
    }
  }
  if (parts.empty()) throw UnsupportedSocle("zero module");
  h.I = direct_sum(parts);
  Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix iota(F, M->dim(), 0);
    for (const auto& H : homs) {
      Matrix phi(F, M->dim(), H[0].cols());
      for (const auto& e : H) phi = phi + e.scaled(rng.elem(F));
      iota = iota.beside(phi);
    }
    if (rank(iota) == M->dim()) {
      h.iota = iota;
      return h;
    }
  }
  throw std::logic_error("injective hull: no injective combination found");
}

Ext1Result ext1(const WeightLabel& S, const Module& M) {
  Hull h = injective_hull_embed(M);
  return ext1_in_hull(build_weight(M->field(), S), M, h.I, h.iota);
}

int ext1_dim(const Field& F, const WeightLabel& tau, const WeightLabel& sigma) {
  auto ctx = sigma_context(F, sigma);
  // Hom(tau, R) lands in the socle, so it maps to zero in R / soc.
  return hom_dim(build_weight(F, tau), ctx->R_mod_soc);
}

Submodule max_submodule_avoiding(const Module& X, const std::vector<WeightLabel>& T) {
  const Field& F = X->field();
  Matrix all(F, X->dim(), 0);
  for (const auto& tau : T) {
    require_hull(F, tau);
    for (const auto& psi : hom_space(X, sigma_context(F, tau)->R)) all = all.beside(psi);
  }
  if (all.cols() == 0) return whole(X);
  return make_sub(X, left_kernel(all));
}

Submodule max_submodule_avoiding_peel(const Module& X, const std::vector<WeightLabel>& T) {
  Submodule K = zero_sub(X);
  while (K.dim() < X->dim()) {
    Module Q = quotient(K);
    Submodule grow = zero_sub(Q);
    for (const auto& piece : socle(Q))
      if (std::find(T.begin(), T.end(), piece.label) == T.end()) grow = sum(grow, piece.sub);
    if (grow.dim() == 0) break;
    K = preimage(K, grow);
  }
  return K;
}

Module universal_extension(const Field& F, const WeightLabel& tau, const std::vector<WeightLabel>& sigmas) {
  Module T = build_weight(F, tau);
  if (sigmas.empty()) return T;
  std::vector<Module> xs;
  std::vector<Matrix> projs;
  for (const auto& s : sigmas) {
    auto ctx = sigma_context(F, s);
    auto H = hom_space(T, ctx->R_mod_soc);
    if (H.size() != 1) throw ExtDimension("Ext^1(" + to_string(tau) + ", " + to_string(s) + ") has dimension " + std::to_string(H.size()));
    Submodule Xs = preimage(ctx->soc, hom_image(ctx->R_mod_soc, H[0]));
    auto Y = solve_left(H[0], project(ctx->soc, Xs.rows()));
    if (!Y) throw std::logic_error("universal extension: projection failed");
    xs.push_back(sub_module(Xs));
    projs.push_back(*Y);
  }
  if (xs.size() == 1) return xs[0];
  Module P = direct_sum(xs);
  const int t = T->dim(), m = static_cast<int>(xs.size());
  Matrix C(F, P->dim(), (m - 1) * t);
  int off = 0;
  for (int i = 0; i < m; ++i) {
    for (int row = 0; row < xs[i]->dim(); ++row)
      for (int k = 0; k < m - 1; ++k)
        for (int c = 0; c < t; ++c) {
          if (i == 0) C(off + row, k * t + c) = projs[0](row, c);
          if (i == k + 1) C(off + row, k * t + c) = F.neg(projs[i](row, c));
        }
    off += xs[i]->dim();
  }
  return sub_module(make_sub(P, left_kernel(C)));
}

std::optional<Submodule> i_sigma_tau(const SigmaContext& ctx, const WeightLabel& tau, bool via_hom) {
  const Field& F = ctx.field();
  if (tau == ctx.sigma) return ctx.soc;
  if (via_hom) {
    if (!is_regular(F, tau) || dimension(tau) < 2) return std::nullopt;
    auto H = hom_space(sigma_context(F, tau)->R, ctx.A_node);
    if (H.size() != 1) return std::nullopt;
    return push_up(ctx.A, hom_image(ctx.A_node, H[0]));
  }
  Module Astar = dual(ctx.A_node);
  Submodule K = max_submodule_avoiding_peel(Astar, {dual_label(F, tau)});
  Submodule I = make_sub(ctx.A_node, kernel(K.rows()));
  if (I.dim() == 0) return std::nullopt;
  return push_up(ctx.A, I);
}

}  // namespace gl2wb
