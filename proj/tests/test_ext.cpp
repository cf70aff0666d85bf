#include <gtest/gtest.h>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/hom.hpp"
#include "gl2wb/serre.hpp"

using namespace gl2wb;

TEST(Baer, GroupLaws) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    auto ctx = sigma_context(F, normalized_label(F, std::vector<int>(f, 1)));
    const ExtClass X = x_class(*ctx, 0);
    const ExtClass split = split_extension(X.A, X.B);
    EXPECT_TRUE(is_split(split));
    ExtClass Y = baer_sum(X, split);
    check_exact(Y);
    EXPECT_TRUE(equivalent(Y, X));
    EXPECT_TRUE(is_split(baer_sum(X, negate(X))));
    EXPECT_TRUE(is_split(scale(X, 0)));
    EXPECT_TRUE(equivalent(baer_sum(X, X), scale(X, 2)));
    EXPECT_FALSE(is_split(scale(X, 3)));
    if (f == 2) {
      const ExtClass X1 = x_class(*ctx, 1);
      EXPECT_TRUE(equivalent(baer_sum(X, X1), baer_sum(X1, X)));
      EXPECT_FALSE(is_split(baer_sum(X, X1)));
    }
  }
}

TEST(Ext1, SerreSetsAreSymmetricAndOneDimensional) {
  const Field& F = Field::get(5, 1);
  for (const auto& spec : generic_specs(F)) {
    const auto D = serre_weights(F, spec);
    for (const auto& s : D)
      for (const auto& t : D) {
        if (s == t) continue;
        const int a = ext1_dim(F, t, s), b = ext1_dim(F, s, t);
        EXPECT_LE(a, 1);
        EXPECT_EQ(a, b) << to_string(s) << " " << to_string(t);
      }
  }
}

TEST(Ext1, WeightIntoItsEnvelope) {
  const Field& F = Field::get(5, 1);
  const WeightLabel s = normalized_label(F, {2});
  auto ctx = sigma_context(F, s);
  EXPECT_EQ(ext1(s, build_weight(F, s)).dim, 0);
  EXPECT_EQ(ext1(s, ctx->R).dim, 0);
  EXPECT_EQ(ext1(s, ctx->A_node).dim, 1);
}

TEST(Hull, OfWeightIsItsEnvelope) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    const WeightLabel s = normalized_label(F, std::vector<int>(f, 2));
    Hull h = injective_hull_embed(build_weight(F, s));
    EXPECT_EQ(h.I->dim(), sigma_context(F, s)->R->dim());
    EXPECT_EQ(h.parts, std::vector<WeightLabel>{s});
    EXPECT_TRUE(is_hom(build_weight(F, s), h.I, h.iota));
  }
}

TEST(UniversalExtension, Examples) {
  const Field& F = Field::get(5, 1);
  const WeightLabel tau = make_label(F, {1}, 0), s = make_label(F, {1}, 2);
  Module E0 = universal_extension(F, tau, {});
  EXPECT_EQ(E0->dim(), 2);
  Module E = universal_extension(F, tau, {s});
  EXPECT_EQ(E->dim(), 4);
  EXPECT_EQ(labels_of(cosocle(E)), std::vector<WeightLabel>{tau});
  EXPECT_EQ(labels_of(socle(E)), std::vector<WeightLabel>{s});
}

TEST(UniversalExtension, CosocleOverSerreSets) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    const auto specs = generic_specs(F);
    const auto D = serre_weights(F, specs.front());
    for (const auto& tau : D) {
      std::vector<WeightLabel> others;
      for (const auto& s : D)
        if (s != tau && ext1_dim(F, tau, s) > 0) others.push_back(s);
      Module E = universal_extension(F, tau, others);
      EXPECT_EQ(labels_of(cosocle(E)), std::vector<WeightLabel>{tau});
      EXPECT_EQ(E->dim(), dimension(tau) + [&] {
        int d = 0;
        for (const auto& s : others) d += dimension(s);
        return d;
      }());
    }
  }
}

TEST(Avoiding, TrivialCasesAndPeelAgreesWithHom) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    auto ctx = sigma_context(F, normalized_label(F, std::vector<int>(f, 1)));
    const Module& X = ctx->A_node;
    EXPECT_EQ(max_submodule_avoiding(X, {}).dim(), X->dim());
    EXPECT_EQ(max_submodule_avoiding(X, labels_of(socle(X))).dim(), 0);
    const auto cf = composition_factors(X);
    for (size_t k = 0; k < cf.size(); ++k) {
      if (cf[k] == ctx->sigma) continue;
      std::vector<WeightLabel> T{cf[k]};
      if (k + 1 < cf.size() && cf[k + 1] != ctx->sigma) T.push_back(cf[k + 1]);
      EXPECT_TRUE(equal(max_submodule_avoiding(X, T), max_submodule_avoiding_peel(X, T))) << to_string(T);
    }
  }
}
