#include <gtest/gtest.h>

#include <random>

#include "gl2wb/matrix.hpp"

using namespace gl2wb;

namespace {

Matrix random_matrix(const Field& F, int r, int c, std::mt19937_64& rng, int rank_cap = -1) {
  Matrix m(F, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng() % F.q());
  if (rank_cap >= 0) {
    Matrix a(F, r, rank_cap), b(F, rank_cap, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < rank_cap; ++j) a(i, j) = static_cast<Elem>(rng() % F.q());
    for (int i = 0; i < rank_cap; ++i)
      for (int j = 0; j < c; ++j) b(i, j) = static_cast<Elem>(rng() % F.q());
    return a * b;
  }
  return m;
}

// Elimination without divisions: row_i <- piv * row_i - x * row_r.
int fraction_free_rank(Matrix a) {
  const Field& F = a.field();
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) piv = i;
    if (piv < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      Elem x = a(i, c), pv = a(r, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) = F.sub(F.mul(pv, a(i, j)), F.mul(x, a(r, j)));
    }
    ++r;
  }
  return r;
}

bool naive_in_span(const Matrix& U, const std::vector<Elem>& v) {
  Matrix extended = U;
  extended.append_row(v.data());
  return fraction_free_rank(extended) == fraction_free_rank(U);
}

}  // namespace

TEST(Rref, IdentityIsFixed) {
  const Field& F = Field::get(5, 1);
  Rref e = rref(Matrix::identity(F, 3));
  EXPECT_EQ(e.m, Matrix::identity(F, 3));
  EXPECT_EQ(e.pivots, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(e.rank, 3);
}

TEST(Rref, ZeroMatrix) {
  const Field& F = Field::get(5, 1);
  Rref e = rref(Matrix(F, 2, 4));
  EXPECT_EQ(e.rank, 0);
  EXPECT_TRUE(e.pivots.empty());
  EXPECT_EQ(e.m.rows(), 0);
}

TEST(Rref, RankAgreesWithFractionFreeElimination) {
  const Field& F = Field::get(5, 2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    int cap = trial == 0 ? -1 : 8 * trial;
    Matrix m = random_matrix(F, 50, 50, rng, cap);
    Rref e = rref(m);
    EXPECT_EQ(e.rank, fraction_free_rank(m));
    // idempotent, row space preserved
    EXPECT_EQ(rref(e.m).m, e.m);
    EXPECT_TRUE(row_space_contains(m, e.m));
    EXPECT_TRUE(row_space_contains(e.m, m));
  }
}

TEST(Kernel, TrivialCases) {
  const Field& F = Field::get(5, 1);
  EXPECT_EQ(kernel(Matrix::identity(F, 4)).rows(), 0);
  EXPECT_EQ(kernel(Matrix(F, 3, 3)).rows(), 3);
}

TEST(Kernel, RankNullityAndMultiplyBack) {
  const Field& F = Field::get(7, 1);
  std::mt19937_64 rng(11);
  for (int r : {0, 5, 17, 33, 40}) {
    Matrix m = random_matrix(F, 30, 40, rng, r);
    Matrix k = kernel(m);
    int rk = rank(m);
    EXPECT_EQ(k.rows(), 40 - rk);
    EXPECT_EQ(rank(k), k.rows());
    EXPECT_TRUE((m * k.transpose()).is_zero());
    Matrix lk = left_kernel(m);
    EXPECT_EQ(lk.rows(), 30 - rk);
    EXPECT_TRUE((lk * m).is_zero());
  }
}

TEST(MeetJoin, Basics) {
  const Field& F = Field::get(7, 1);
  std::mt19937_64 rng(3);
  Matrix U = random_matrix(F, 6, 20, rng);
  auto [m, j] = subspace_meet_join(U, U);
  EXPECT_EQ(m, rref(U).m);
  EXPECT_EQ(j, rref(U).m);
  Matrix E = Matrix::identity(F, 20);
  auto [m2, j2] = subspace_meet_join(E.row_block(0, 8), E.row_block(8, 12));
  EXPECT_EQ(m2.rows(), 0);
  EXPECT_EQ(j2.rows(), 20);
}

TEST(MeetJoin, DimensionFormulaAndModularLaw) {
  const Field& F = Field::get(7, 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix C = random_matrix(F, 4, 20, rng);
    Matrix U = random_matrix(F, 6, 20, rng).stack(C);
    Matrix V = random_matrix(F, 5 + trial % 4, 20, rng).stack(C);
    auto [meet, join] = subspace_meet_join(U, V);
    EXPECT_EQ(meet.rows() + join.rows(), rank(U) + rank(V));
    // membership: meet rows lie in both, random elements of both lie in meet
    for (int i = 0; i < meet.rows(); ++i) {
      EXPECT_TRUE(naive_in_span(U, meet.row_vec(i)));
      EXPECT_TRUE(naive_in_span(V, meet.row_vec(i)));
    }
    for (int i = 0; i < C.rows(); ++i) EXPECT_TRUE(naive_in_span(meet, C.row_vec(i)));
    // modular law: for W inside U, W + (U meet V) = U meet (W + V)
    Matrix W = U.row_block(0, 3);
    Matrix lhs = subspace_meet_join(W, meet).second;
    Matrix rhs = subspace_meet_join(U, subspace_meet_join(W, V).second).first;
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Kron, Identity) {
  const Field& F = Field::get(5, 1);
  EXPECT_EQ(kron(Matrix::identity(F, 2), Matrix::identity(F, 3)), Matrix::identity(F, 6));
}

TEST(Kron, EntryFormulaAndMixedProduct) {
  const Field& F = Field::get(5, 1);
  std::mt19937_64 rng(1);
  Matrix A = random_matrix(F, 2, 2, rng), B = random_matrix(F, 3, 3, rng);
  Matrix K = kron(A, B);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) EXPECT_EQ(K(i * 3 + k, j * 3 + l), F.mul(A(i, j), B(k, l)));
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(F, 3, 3, rng), b = random_matrix(F, 3, 3, rng);
    Matrix c = random_matrix(F, 3, 3, rng), d = random_matrix(F, 3, 3, rng);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Solve, InverseAndLeftSolve) {
  const Field& F = Field::get(5, 2);
  std::mt19937_64 rng(9);
  Matrix m = random_matrix(F, 12, 12, rng);
  while (rank(m) < 12) m = random_matrix(F, 12, 12, rng);
  EXPECT_EQ(m * inverse(m), Matrix::identity(F, 12));
  Matrix A = random_matrix(F, 5, 9, rng);
  Matrix X = random_matrix(F, 4, 5, rng);
  auto sol = solve_left(A, X * A);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(*sol * A, X * A);
  Matrix outside = Matrix::identity(F, 9).row_block(0, 9);
  EXPECT_FALSE(solve_left(A, outside).has_value());
  Rref e = rref(A);
  Matrix co = coordinates(e, X * A);
  EXPECT_EQ(co * e.m, X * A);
}
