#include <gtest/gtest.h>

#include "gl2wb/hom.hpp"
#include "gl2wb/module.hpp"

using namespace gl2wb;

namespace {

void expect_multiplicative(const Module& M, Rng& rng, int trials = 100) {
  const Field& F = M->field();
  for (int t = 0; t < trials; ++t) {
    GroupElement g = random_element(F, rng), h = random_element(F, rng);
    // row convention: rho(gh) = rho(h) rho(g)
    ASSERT_EQ(M->eval(h) * M->eval(g), M->eval(g_mul(F, g, h))) << M->describe();
  }
  auto gens = generators(F);
  for (size_t k = 0; k < gens.size(); ++k) EXPECT_EQ(M->eval(gens[k]), M->gen(static_cast<int>(k)));
  Matrix T = M->eval(random_element(F, rng));
  EXPECT_EQ(rank(T), M->dim());
}

void expect_torus_eigenbasis(const Module& M, Rng& rng) {
  const Field& F = M->field();
  for (int t = 0; t < 5; ++t) {
    Elem x = rng.nonzero(F), y = rng.nonzero(F);
    Matrix T = M->eval({x, 0, 0, y});
    for (int i = 0; i < M->dim(); ++i)
      for (int j = 0; j < M->dim(); ++j) {
        Character c = M->chars()[i];
        Elem expect = i == j ? F.mul(F.pow(x, c.a), F.pow(y, c.b)) : 0;
        ASSERT_EQ(T(i, j), expect);
      }
  }
}

}  // namespace

TEST(Module, EvaluatorIsMultiplicative) {
  Rng rng(17);
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    Module V2 = sym(F, 2), V1 = sym(F, 1), V3f = sym(F, 3, 1);
    Module T = tensor(V1, V3f);
    std::vector<Module> mods{V2, V3f, T, det_twist(V2, 3), dual(T), direct_sum({V2, T}), frob_twist(T, 1)};
    Module VV = tensor(V1, V1);
    Submodule S = spin(VV, Matrix::from_rows(F, 4, {{1, 0, 0, 0}}));
    mods.push_back(sub_module(S));
    mods.push_back(quotient(S));
    Module W = from_generators(F, T->gens(), T->chars(), "words");
    mods.push_back(W);
    for (const auto& M : mods) {
      expect_multiplicative(M, rng, f == 1 ? 100 : 40);
      expect_torus_eigenbasis(M, rng);
    }
    for (int t = 0; t < 30; ++t) {
      GroupElement g = random_element(F, rng);
      EXPECT_EQ(W->eval(g), T->eval(g));
    }
  }
}

TEST(Spin, Basics) {
  const Field& F = Field::get(5, 1);
  Module V3 = sym(F, 3);
  EXPECT_EQ(spin(V3, Matrix(F, 0, 4)).dim(), 0);
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix v(F, 1, 4);
    for (int j = 0; j < 4; ++j) v(0, j) = rng.elem(F);
    if (v.is_zero()) continue;
    EXPECT_EQ(spin(V3, v).dim(), 4);
  }
  // X^2 (x) ... highest weight vector of V_2 inside V_1 (x) V_1 is X (x) X
  Module VV = tensor(sym(F, 1), sym(F, 1));
  Submodule S = spin(VV, Matrix::from_rows(F, 4, {{1, 0, 0, 0}}));
  EXPECT_EQ(S.dim(), 3);
  EXPECT_TRUE(is_stable(VV, S.rows()));
  auto homs = hom_space(sym(F, 2), VV);
  ASSERT_EQ(homs.size(), 1u);
  EXPECT_TRUE(equal(hom_image(VV, homs[0]), S));
}

TEST(Hom, SmallExamples) {
  const Field& F = Field::get(5, 1);
  EXPECT_EQ(hom_dim(sym(F, 2), sym(F, 2)), 1);
  EXPECT_EQ(hom_dim(sym(F, 1), sym(F, 2)), 0);
  Module VV = tensor(sym(F, 1), sym(F, 1));
  EXPECT_EQ(hom_dim(VV, VV), 2);
  EXPECT_EQ(hom_dim(det_twist(sym(F, 0), 1), VV), 1);
  EXPECT_EQ(hom_dim(sym(F, 0), VV), 0);
}

TEST(Hom, AgreesWithBruteForceSolve) {
  // Solve T^M_g X = X T^N_g directly on all dim(M)*dim(N) unknowns.
  const Field& F = Field::get(5, 1);
  auto brute = [&](const Module& M, const Module& N) {
    const int n = M->dim(), m = N->dim();
    Matrix sys(F, n * m, 0);
    for (const auto& g : generators(F)) {
      Matrix A = M->eval(g), B = N->eval(g);
      Matrix block(F, n * m, n * m);
      // unknown X(i,j) at column i*m + j; equation (AX - XB)(r, c)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
          int eq = r * m + c;
          for (int k = 0; k < n; ++k) block(k * m + c, eq) = F.add(block(k * m + c, eq), A(r, k));
          for (int k = 0; k < m; ++k) block(r * m + k, eq) = F.sub(block(r * m + k, eq), B(k, c));
        }
      sys = sys.beside(block);
    }
    return left_kernel(sys).rows();
  };
  Module VV = tensor(sym(F, 1), sym(F, 1));
  Module X = tensor(sym(F, 2), sym(F, 3));
  Module Y = tensor(sym(F, 4), sym(F, 1));
  Module Z = direct_sum({VV, det_twist(sym(F, 0), 1)});
  for (const auto& [M, N] : std::vector<std::pair<Module, Module>>{{VV, VV}, {X, Y}, {Y, X}, {X, X}, {Z, VV}, {VV, Z}, {Z, Z}})
    EXPECT_EQ(hom_dim(M, N), brute(M, N)) << M->describe() << " -> " << N->describe();
}
