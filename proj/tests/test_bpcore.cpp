#include <gtest/gtest.h>

#include <algorithm>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/hom.hpp"

using namespace gl2wb;

namespace {

std::vector<WeightLabel> sorted(std::vector<WeightLabel> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Matrix random_in(const Submodule& S, Rng& rng) {
  const Field& F = S.ambient->field();
  Matrix v(F, 1, S.ambient->dim());
  for (int i = 0; i < S.dim(); ++i) axpy(F, v.row(0), S.rows().row(i), rng.elem(F), v.cols());
  return v;
}

}  // namespace

TEST(RrBuild, R2AtFive) {
  const Field& F = Field::get(5, 1);
  const auto& d = build_R_r(F, 2);
  EXPECT_EQ(d.R->dim(), 10);
  ASSERT_TRUE(d.W.has_value());
  EXPECT_EQ(d.W->dim(), 7);
  const WeightLabel top = make_label(F, {2}, 2);
  const auto layers = socle_series(d.R);
  ASSERT_EQ(layers.size(), 3u);
  EXPECT_EQ(layers[0], std::vector<WeightLabel>{top});
  EXPECT_EQ(layers[1], sorted({make_label(F, {2}, 0), make_label(F, {0}, 1)}));
  EXPECT_EQ(layers[2], std::vector<WeightLabel>{top});
  EXPECT_EQ(labels_of(cosocle(d.R)), std::vector<WeightLabel>{top});
}

TEST(RrBuild, TopCaseIsSteinberg) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{7, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    const auto& d = build_R_r(F, p - 1);
    EXPECT_EQ(d.R->dim(), p);
    EXPECT_TRUE(is_irreducible(d.R));
    EXPECT_FALSE(d.W.has_value());
  }
}

TEST(RrBuild, TrivialSocleAtDegreeOneDeclines) {
  EXPECT_THROW(build_R_r(Field::get(5, 1), 0), ExtractionFailed);
  EXPECT_THROW(build_R_r(Field::get(7, 1), 0), ExtractionFailed);
}

TEST(RrBuild, AllRAtDegreeTwo) {
  const Field& F = Field::get(5, 2);
  for (int r = 0; r <= 3; ++r) {
    const auto& d = build_R_r(F, r);
    EXPECT_EQ(d.R->dim(), 10);
    EXPECT_EQ(d.W->dim(), 10 - r - 1);
    EXPECT_EQ(labels_of(socle(d.R)), std::vector<WeightLabel>{rr_socle_label(F, r)});
  }
}

TEST(MuWeights, DegreeOne) {
  const Field& F = Field::get(5, 1);
  auto mu = mu_weights(F, normalized_label(F, {2}));
  ASSERT_EQ(mu.size(), 1u);
  EXPECT_EQ(mu[0].plus, make_label(F, {2}, 0));
  ASSERT_TRUE(mu[0].minus.has_value());
  EXPECT_EQ(*mu[0].minus, make_label(F, {0}, 1));
  auto top = mu_weights(F, normalized_label(F, {3}));
  EXPECT_FALSE(top[0].minus.has_value());
}

TEST(SigmaContext, DegreeOneShape) {
  const Field& F = Field::get(5, 1);
  for (int r = 1; r <= 3; ++r) {
    auto ctx = sigma_context(F, normalized_label(F, {r}));
    EXPECT_EQ(ctx->Aprime_i[0].dim(), ctx->R->dim());
    EXPECT_EQ(ctx->B.dim(), ctx->R->dim());
  }
}

TEST(SigmaContext, AprimePiecesAtDegreeTwo) {
  const Field& F = Field::get(5, 2);
  for (const auto& s : {std::vector<int>{1, 1}, std::vector<int>{0, 2}, std::vector<int>{3, 1}}) {
    auto ctx = sigma_context(F, normalized_label(F, s));
    const std::vector<WeightLabel> just{ctx->sigma};
    EXPECT_TRUE(equal(meet(ctx->Aprime_i[0], ctx->Aprime_i[1]), ctx->soc));
    for (int i = 0; i < 2; ++i) {
      Module Ai = sub_module(ctx->Aprime_i[i]);
      EXPECT_EQ(labels_of(socle(Ai)), just);
      EXPECT_EQ(labels_of(cosocle(Ai)), just);
      EXPECT_EQ(socle_series(Ai).size(), 3u);
    }
    EXPECT_EQ(multiplicity(sub_module(ctx->Aprime), ctx->sigma), 3);
    EXPECT_TRUE(is_multiplicity_free(ctx->A_node));
  }
}

TEST(SigmaContext, Gr1IsSumOfMuPairs) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    for (const auto& sigma : {normalized_label(F, std::vector<int>(f, 1)), normalized_label(F, std::vector<int>(f, 2))}) {
      auto ctx = sigma_context(F, sigma);
      std::vector<WeightLabel> want, got;
      for (const auto& m : ctx->mu) {
        want.push_back(m.plus);
        if (m.minus) want.push_back(*m.minus);
      }
      for (const auto& g : ctx->gr1)
        for (int k = 0; k < g.mult; ++k) got.push_back(g.label);
      EXPECT_EQ(sorted(got), sorted(want)) << to_string(sigma);
    }
  }
}

TEST(SigmaContext, TwistedSigmaMatchesBase) {
  const Field& F = Field::get(5, 2);
  const WeightLabel base = normalized_label(F, {2, 1});
  const WeightLabel tw = det_twist(F, base, 5);
  auto a = sigma_context(F, base), b = sigma_context(F, tw);
  EXPECT_EQ(b->R->dim(), a->R->dim());
  EXPECT_EQ(b->A.dim(), a->A.dim());
  EXPECT_EQ(labels_of(socle(b->R)), std::vector<WeightLabel>{tw});
  EXPECT_EQ(b->mu[0].plus, det_twist(F, a->mu[0].plus, 5));
}

TEST(Criteria, Examples) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    auto ctx = sigma_context(F, normalized_label(F, std::vector<int>(f, 1)));
    EXPECT_TRUE(is_alternative(*ctx, ctx->soc));
    EXPECT_FALSE(is_alternative(*ctx, whole(ctx->R)));
    EXPECT_TRUE(inclusion_criterion(*ctx, ctx->A));
    for (int i = 0; i < f; ++i) EXPECT_FALSE(inclusion_criterion(*ctx, ctx->Aprime_i[i]));
  }
}

TEST(Criteria, RandomSpinsRespectInclusion) {
  Rng rng(2024);
  const Field& F = Field::get(5, 2);
  auto ctx = sigma_context(F, normalized_label(F, {1, 2}));
  std::vector<Submodule> pool{ctx->A, ctx->B, ctx->Aprime, ctx->fil1};
  for (const auto& g : ctx->gr1) pool.push_back(g.preimage);
  int hyp = 0;
  for (int t = 0; t < 40; ++t) {
    const Submodule& src = pool[rng.below(pool.size())];
    Submodule M = spin(ctx->R, random_in(src, rng));
    hyp += inclusion_criterion(*ctx, M);
    if (inclusion_criterion(*ctx, M)) EXPECT_TRUE(contains(ctx->A, M));
    if (is_alternative(*ctx, M)) EXPECT_TRUE(inclusion_criterion(*ctx, M));
  }
  EXPECT_GT(hyp, 0);
}

TEST(ExtBasis, DimensionAndNonSplit) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{7, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    auto ctx = sigma_context(F, normalized_label(F, std::vector<int>(f, 2)));
    EXPECT_EQ(ext1(ctx->sigma, ctx->A_node).dim, f);
    for (int i = 0; i < f; ++i) {
      ExtClass X = x_class(*ctx, i);
      check_exact(X);
      EXPECT_FALSE(is_split(X));
    }
  }
}
