#include "gl2wb/ext.hpp"

#include "gl2wb/hom.hpp"

namespace gl2wb {

namespace {

Matrix flatten(const std::vector<Matrix>& ms) {
  const Field& F = ms.front().field();
  const int n = ms.front().rows() * ms.front().cols();
  Matrix out(F, static_cast<int>(ms.size()), n);
  for (size_t k = 0; k < ms.size(); ++k) std::copy(ms[k].data().begin(), ms[k].data().end(), out.row(static_cast<int>(k)));
  return out;
}

bool same_module(const Module& a, const Module& b) {
  return a == b || (a->dim() == b->dim() && fingerprint(*a) == fingerprint(*b));
}

}  // namespace

void check_exact(const ExtClass& E) {
  const int b = E.B->dim(), x = E.X->dim(), a = E.A->dim();
  if (E.incl.rows() != b || E.incl.cols() != x || E.proj.rows() != x || E.proj.cols() != a)
    throw std::logic_error("extension maps have wrong shape");
  if (b + a != x) throw std::logic_error("extension dimensions do not add up");
  if (rank(E.incl) != b || rank(E.proj) != a) throw std::logic_error("extension maps not injective/surjective");
  if (!(E.incl * E.proj).is_zero()) throw std::logic_error("extension is not a complex");
  if (!is_hom(E.B, E.X, E.incl) || !is_hom(E.X, E.A, E.proj)) throw std::logic_error("extension maps not equivariant");
}

ExtClass split_extension(const Module& A, const Module& B) {
  const Field& F = A->field();
  const int a = A->dim(), b = B->dim();
  ExtClass E;
  E.X = direct_sum({B, A});
  E.B = B;
  E.A = A;
  E.incl = Matrix::identity(F, b).beside(Matrix(F, b, a));
  E.proj = Matrix(F, b, a).stack(Matrix::identity(F, a));
  return E;
}

ExtClass baer_sum(const ExtClass& E, const ExtClass& E2) {
  if (!same_module(E.A, E2.A) || !same_module(E.B, E2.B)) throw ShapeMismatch("Baer sum of extensions with different ends");
  const Field& F = E.X->field();
  const int x2 = E2.X->dim(), a = E.A->dim(), b = E.B->dim();
  Module P = direct_sum({E.X, E2.X});
  // Pullback X'' = {(x, x') : proj(x) = proj'(x')}.
  Matrix diff = E.proj.stack(E2.proj.scaled(F.neg(1)));
  Submodule pull = make_sub(P, left_kernel(diff));
  Module Xpp = sub_module(pull);
  // Skew diagonal {(-incl(b), incl'(b))} inside X''.
  Matrix skew = E.incl.scaled(F.neg(1)).beside(E2.incl);
  Submodule skewSub = make_sub(Xpp, restrict_to(pull, skew));
  ExtClass out;
  out.X = quotient(skewSub);
  out.A = E.A;
  out.B = E.B;
  Matrix left = E.incl.beside(Matrix(F, b, x2));
  out.incl = project(skewSub, restrict_to(pull, left));
  // Quotient basis: the X'' basis vectors at the non-pivot positions of skewSub.
  std::vector<char> piv(Xpp->dim(), 0);
  for (int c : skewSub.basis.pivots) piv[c] = 1;
  Matrix projP = E.proj.stack(Matrix(F, x2, a));
  Matrix pp = pull.rows() * projP;
  Matrix proj(F, out.X->dim(), a);
  int k = 0;
  for (int j = 0; j < Xpp->dim(); ++j) {
    if (piv[j]) continue;
    std::copy(pp.row(j), pp.row(j) + a, proj.row(k++));
  }
  out.proj = proj;
  check_exact(out);
  return out;
}

ExtClass scale(const ExtClass& E, Elem c) {
  if (c == 0) return split_extension(E.A, E.B);
  ExtClass out = E;
  out.incl = E.incl.scaled(E.X->field().inv(c));
  return out;
}

ExtClass negate(const ExtClass& E) { return scale(E, E.X->field().neg(1)); }

bool is_split(const ExtClass& E) {
  const Field& F = E.X->field();
  auto H = hom_space(E.A, E.X);
  if (H.empty()) return false;
  std::vector<Matrix> comp;
  comp.reserve(H.size());
  for (const auto& h : H) comp.push_back(h * E.proj);
  Matrix id = Matrix::identity(F, E.A->dim());
  return solve_left(flatten(comp), flatten({id})).has_value();
}

bool equivalent(const ExtClass& E, const ExtClass& E2) { return is_split(baer_sum(E, negate(E2))); }

Ext1Result ext1_in_hull(const Module& S, const Module& M, const Module& I, const Matrix& iota) {
  Ext1Result res;
  res.image_of_M = make_sub(I, iota);
  if (res.image_of_M.dim() != M->dim()) throw std::invalid_argument("ext1: embedding is not injective");
  Module Q = quotient(res.image_of_M);
  auto HQ = hom_space(S, Q);
  if (HQ.empty()) return res;
  std::vector<Matrix> fromI;
  for (const auto& g : hom_space(S, I)) fromI.push_back(project(res.image_of_M, g));
  Rref span;
  if (!fromI.empty()) span = rref(flatten(fromI));
  Matrix acc = fromI.empty() ? Matrix(S->field(), 0, S->dim() * Q->dim()) : span.m;
  int base = acc.rows();
  for (const auto& h : HQ) {
    Matrix trial = acc.stack(flatten({h}));
    if (rank(trial) == acc.rows() + 1) {
      acc = trial;
      res.maps.push_back(h);
    }
  }
  res.dim = acc.rows() - base;
  for (const auto& psi : res.maps) {
    Submodule Xs = preimage(res.image_of_M, hom_image(Q, psi));
    ExtClass E;
    E.X = sub_module(Xs);
    E.B = M;
    E.A = S;
    E.incl = restrict_to(Xs, iota);
    auto Y = solve_left(psi, project(res.image_of_M, Xs.rows()));
    if (!Y) throw std::logic_error("ext1: class does not map onto the chosen image");
    E.proj = *Y;
    check_exact(E);
    res.classes.push_back(std::move(E));
  }
  return res;
}

}  // namespace gl2wb
