#include "gl2wb/hom.hpp"

#include <stdexcept>

namespace gl2wb {

namespace {

std::shared_ptr<const SpinPresentation> build_presentation(const ModuleNode& M) {
  const Field& F = M.field();
  const int n = M.dim();
  const int ngen = num_generators(F);
  auto P = std::make_shared<SpinPresentation>();
  P->B = Matrix(F, 0, n);
  Rref ech;
  ech.m = Matrix(F, 0, n);

  auto insert = [&](const Elem* v, int parent, int via) -> bool {
    std::vector<Elem> w(v, v + n);
    if (reduce_against(ech, w.data())) return false;
    int piv = 0;
    while (w[piv] == 0) ++piv;
    scale_row(F, w.data(), F.inv(w[piv]), n);
    for (int i = 0; i < ech.rank; ++i) {
      Elem c = ech.m(i, piv);
      if (c != 0) axpy(F, ech.m.row(i), w.data(), F.neg(c), n);
    }
    ech.m.append_row(w.data());
    ech.pivots.push_back(piv);
    ++ech.rank;
    P->B.append_row(v);
    P->parent.push_back(parent);
    P->via.push_back(via);
    return true;
  };
  auto close = [&](int from) {
    for (int head = from; head < P->B.rows() && ech.rank < n; ++head) {
      for (int k = 0; k < ngen; ++k) {
        Matrix v = P->B.row_block(head, 1) * M.gen(k);
        insert(v.row(0), head, k);
      }
    }
  };
  auto seed = [&](const Elem* v, Character chi, bool fixed) {
    int at = P->B.rows();
    if (insert(v, -1, -1)) {
      P->seeds.push_back({at, chi, fixed});
      close(at);
    }
  };

  const Rref& U = M.u_invariants();
  for (int i = 0; i < U.rank && ech.rank < n; ++i) seed(U.m.row(i), M.chars()[U.pivots[i]], true);
  Matrix I = Matrix::identity(F, n);
  for (int j = 0; j < n && ech.rank < n; ++j) seed(I.row(j), M.chars()[j], false);

  P->Binv = inverse(P->B);
  for (int k = 0; k < ngen; ++k) P->C.push_back(P->B * M.gen(k) * P->Binv);
  return P;
}

// Rows of N with the given character, restricted to the U-invariants if asked.
Matrix candidate_images(const ModuleNode& N, Character chi, bool u_fixed) {
  const Field& F = N.field();
  Matrix out(F, 0, N.dim());
  if (u_fixed) {
    const Rref& U = N.u_invariants();
    for (int i = 0; i < U.rank; ++i)
      if (N.chars()[U.pivots[i]] == chi) out.append_row(U.m.row(i));
  } else {
    std::vector<Elem> e(N.dim(), 0);
    for (int j = 0; j < N.dim(); ++j)
      if (N.chars()[j] == chi) {
        e[j] = 1;
        out.append_row(e.data());
        e[j] = 0;
      }
  }
  return out;
}

}  // namespace

std::shared_ptr<const SpinPresentation> ModuleNode::spin_presentation() const {
  {
    std::lock_guard lock(cache_mu_);
    if (spin_) return spin_;
  }
  auto P = build_presentation(*this);
  std::lock_guard lock(cache_mu_);
  if (!spin_) spin_ = P;
  return spin_;
}

std::vector<Matrix> hom_space(const Module& M, const Module& N) {
  const Field& F = M->field();
  if (&N->field() != &F) throw std::invalid_argument("hom between modules over different fields");
  const int n = M->dim(), m = N->dim();
  if (n == 0 || m == 0) return {};
  auto P = M->spin_presentation();
  const int ngen = num_generators(F);

  // Unknowns: coefficient vectors for the images of the seeds.
  std::vector<Matrix> cand;
  int nunk = 0;
  for (const auto& s : P->seeds) {
    cand.push_back(candidate_images(*N, s.chi, s.u_fixed));
    nunk += cand.back().rows();
  }
  if (nunk == 0) return {};

  // L[j]: image of the j-th spin vector as a linear function of the unknowns.
  std::vector<Matrix> L(n);
  int off = 0;
  for (size_t si = 0; si < P->seeds.size(); ++si) {
    Matrix Ls(F, nunk, m);
    for (int i = 0; i < cand[si].rows(); ++i) std::copy(cand[si].row(i), cand[si].row(i) + m, Ls.row(off + i));
    off += cand[si].rows();
    L[P->seeds[si].index] = std::move(Ls);
  }
  for (int j = 0; j < n; ++j)
    if (P->parent[j] >= 0) L[j] = L[P->parent[j]] * N->gen(P->via[j]);

  // child[j][k] = index produced from j by generator k, if any
  std::vector<std::vector<int>> child(n, std::vector<int>(ngen, -1));
  for (int j = 0; j < n; ++j)
    if (P->parent[j] >= 0) child[P->parent[j]][P->via[j]] = j;

  int k_cur = nunk;
  Matrix K = Matrix::identity(F, nunk);
  for (int j = 0; j < n && k_cur > 0; ++j) {
    for (int g = 0; g < ngen && k_cur > 0; ++g) {
      if (child[j][g] >= 0) continue;
      Matrix R = L[j] * N->gen(g);
      const Elem* c = P->C[g].row(j);
      for (int i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        const Matrix& Li = L[i];
        Elem neg = F.neg(c[i]);
        for (int r = 0; r < k_cur; ++r) axpy(F, R.row(r), Li.row(r), neg, m);
      }
      if (R.is_zero()) continue;
      Matrix Z = left_kernel(R);
      k_cur = Z.rows();
      K = Z * K;
      for (auto& Li : L) Li = Z * Li;
    }
  }
  std::vector<Matrix> out;
  for (int r = 0; r < k_cur; ++r) {
    Matrix Y(F, n, m);
    for (int j = 0; j < n; ++j) std::copy(L[j].row(r), L[j].row(r) + m, Y.row(j));
    Matrix phi = P->Binv * Y;
    if (!is_hom(M, N, phi)) throw std::logic_error("hom_space produced a non-equivariant map");
    out.push_back(std::move(phi));
  }
  return out;
}

int hom_dim(const Module& M, const Module& N) { return static_cast<int>(hom_space(M, N).size()); }

}  // namespace gl2wb
