#include "gl2wb/fitting.hpp"

#include "gl2wb/hom.hpp"

namespace gl2wb {

namespace {

// psi^N for N >= dim, by repeated squaring.
Matrix stable_power(Matrix psi) {
  for (int n = 1; n < psi.rows(); n *= 2) psi = psi * psi;
  return psi;
}

void split(const Module& X, const Matrix& toAmbient, const Module& M, Rng& rng, int trials,
           std::vector<Submodule>& out) {
  const Field& F = X->field();
  const int n = X->dim();
  auto E = hom_space(X, X);
  if (E.size() <= 1) {
    out.push_back(make_sub(M, toAmbient));
    return;
  }
  for (int t = 0; t < trials; ++t) {
    Matrix phi(F, n, n);
    for (const auto& e : E) phi = phi + e.scaled(rng.elem(F));
    bool local_here = false;
    for (int c = 0; c < F.q(); ++c) {
      Matrix psi = stable_power(phi - Matrix::identity(F, n).scaled(static_cast<Elem>(c)));
      Matrix K = left_kernel(psi);
      if (K.rows() == 0) continue;
      if (K.rows() == n) {
        local_here = true;
        break;
      }
      Submodule Ks = make_sub(X, K), Is = make_sub(X, psi);
      split(sub_module(Ks), Ks.rows() * toAmbient, M, rng, trials, out);
      split(sub_module(Is), Is.rows() * toAmbient, M, rng, trials, out);
      return;
    }
    if (!local_here) throw DecompositionInconclusive("random endomorphism has no eigenvalue in F_q");
  }
  out.push_back(make_sub(M, toAmbient));
}

}  // namespace

std::vector<Submodule> fitting_decompose(const Module& M, Rng& rng, int trials) {
  std::vector<Submodule> out;
  if (M->dim() == 0) return out;
  split(M, Matrix::identity(M->field(), M->dim()), M, rng, trials, out);
  return out;
}

}  // namespace gl2wb
