#include <gtest/gtest.h>

#include "gl2wb/hom.hpp"
#include "gl2wb/structure.hpp"
#include "gl2wb/weights.hpp"

using namespace gl2wb;

TEST(Weights, Dimensions) {
  const Field& F5 = Field::get(5, 1);
  Module triv = build_weight(F5, make_label(F5, {0}, 0));
  EXPECT_EQ(triv->dim(), 1);
  Rng rng(1);
  for (int t = 0; t < 10; ++t) EXPECT_EQ(triv->eval(random_element(F5, rng)), Matrix::identity(F5, 1));
  EXPECT_EQ(build_weight(F5, make_label(F5, {4}, 0))->dim(), 5);
  const Field& F25 = Field::get(5, 2);
  WeightLabel L = make_label(F25, {2, 3}, 7);
  EXPECT_EQ(build_weight(F25, L)->dim(), 12);
  EXPECT_EQ(dimension(L), 12);
  EXPECT_EQ(central_exponent(F25, L), 7);
}

TEST(Weights, CentralCharacterMatchesFormula) {
  Rng rng(2);
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    auto labels = all_labels(F);
    for (int t = 0; t < 30; ++t) {
      const auto& L = labels[rng.below(labels.size())];
      Elem z = rng.nonzero(F);
      Matrix T = build_weight(F, L)->eval({z, 0, 0, z});
      EXPECT_EQ(T, Matrix::identity(F, dimension(L)).scaled(F.pow(z, central_exponent(F, L))));
    }
  }
}

TEST(Weights, Regularity) {
  const Field& F = Field::get(5, 2);
  EXPECT_FALSE(is_regular(F, make_label(F, {4, 0}, 0)));
  EXPECT_TRUE(is_regular(F, make_label(F, {0, 0}, 0)));
  EXPECT_TRUE(is_regular(F, make_label(F, {3, 3}, 0)));
}

TEST(Weights, TwistsRoundTrip) {
  const Field& F = Field::get(5, 1);
  WeightLabel L = make_label(F, {2}, 5);
  EXPECT_EQ(det_twist(F, L, 0), L);
  Normalized n = normalize(F, L);
  EXPECT_EQ(n.label, make_label(F, {2}, -2));
  EXPECT_EQ(n.twist, 3);
  EXPECT_EQ(det_twist(F, n.label, n.twist), L);
  const Field& G = Field::get(7, 2);
  Rng rng(9);
  auto labels = all_labels(G);
  for (int t = 0; t < 50; ++t) {
    const auto& M = labels[rng.below(labels.size())];
    Normalized m = normalize(G, M);
    EXPECT_EQ(det_twist(G, m.label, m.twist), M);
    EXPECT_EQ(frobenius_shift(G, frobenius_shift(G, M, 1), 1), M);
    EXPECT_EQ(dual_label(G, dual_label(G, M)), M);
  }
}

TEST(Weights, FrobeniusShiftMatchesModule) {
  const Field& F = Field::get(5, 2);
  WeightLabel L = make_label(F, {1, 3}, 4);
  Module twisted = frob_twist(build_weight(F, L), 1);
  EXPECT_EQ(identify(twisted), frobenius_shift(F, L, 1));
  Module D = dual(build_weight(F, L));
  EXPECT_EQ(identify(D), dual_label(F, L));
}

TEST(Weights, TextFormat) {
  const Field& F = Field::get(5, 2);
  WeightLabel L = make_label(F, {2, 3}, 7);
  EXPECT_EQ(to_string(L), "(2,3)*det^7");
  EXPECT_EQ(parse_label(F, "(2,3)*det^7"), L);
  EXPECT_EQ(parse_label(F, " ( 2 , 3 ) * det^31 "), L);
  EXPECT_EQ(parse_label(F, "(2,3)*det^-17"), L);
  EXPECT_THROW(parse_label(F, "(2)*det^1"), std::invalid_argument);
  EXPECT_THROW(parse_label(F, "2,3"), std::invalid_argument);
  for (const auto& M : all_labels(F)) EXPECT_EQ(parse_label(F, to_string(M)), M);
}

TEST(Identify, ExhaustiveAtFive) {
  const Field& F = Field::get(5, 1);
  auto labels = all_labels(F);
  EXPECT_EQ(labels.size(), 20u);
  for (const auto& L : labels) {
    Module M = build_weight(F, L);
    EXPECT_EQ(identify(M), L);
    EXPECT_TRUE(is_irreducible(M));
    for (const auto& K : labels)
      if (!(K == L)) EXPECT_EQ(hom_dim(build_weight(F, K), M), 0) << to_string(K) << " " << to_string(L);
  }
}

TEST(Identify, SampledAtTwentyFive) {
  const Field& F = Field::get(5, 2);
  auto labels = all_labels(F);
  Rng rng(12);
  for (int t = 0; t < 25; ++t) {
    const auto& L = labels[rng.below(labels.size())];
    Module M = build_weight(F, L);
    EXPECT_TRUE(is_irreducible(M)) << to_string(L);
    EXPECT_EQ(identify(M), L);
  }
}

TEST(Identify, ClebschGordanSummands) {
  const Field& F = Field::get(5, 1);
  Module VV = tensor(sym(F, 1), sym(F, 1));
  auto soc = socle(VV);
  ASSERT_EQ(soc.size(), 2u);
  std::vector<WeightLabel> got;
  for (const auto& piece : soc) got.push_back(identify(sub_module(piece.sub)));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<WeightLabel>{make_label(F, {0}, 1), make_label(F, {2}, 0)}));
  EXPECT_THROW(identify(VV), NotIrreducible);
}

TEST(Structure, SocleOfWeight) {
  const Field& F = Field::get(7, 1);
  for (int r = 0; r < 7; ++r) {
    WeightLabel L = make_label(F, {r}, 2);
    Module M = build_weight(F, L);
    auto soc = socle(M);
    ASSERT_EQ(soc.size(), 1u);
    EXPECT_EQ(soc[0].label, L);
    EXPECT_EQ(socle_series(M), (std::vector<std::vector<WeightLabel>>{{L}}));
    EXPECT_EQ(multiplicity(M, L), 1);
    EXPECT_EQ(labels_of(cosocle(M)), (std::vector<WeightLabel>{L}));
  }
}

TEST(Structure, TensorProductSeries) {
  // V_3 (x) V_1 over F_5: a non-split piece of length 3 plus nothing else
  const Field& F = Field::get(5, 1);
  Module M = tensor(sym(F, 3), sym(F, 1));
  auto series = socle_series(M);
  int total = 0;
  for (const auto& layer : series)
    for (const auto& L : layer) total += dimension(L);
  EXPECT_EQ(total, 8);
  auto cf = composition_factors(M);
  // Brauer character check: V_3 x V_1 has factors V_4 and V_2 x det
  EXPECT_EQ(cf, (std::vector<WeightLabel>{make_label(F, {2}, 1), make_label(F, {4}, 0)}));
}
