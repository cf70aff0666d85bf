#include <gtest/gtest.h>

#include <algorithm>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/serre.hpp"

using namespace gl2wb;

TEST(D0, IrreducibleAtFive) {
  const Field& F = Field::get(5, 1);
  const auto D = serre_weights(F, {2, {1}, 0});
  const D0Result d0 = build_D0(F, D);
  ASSERT_EQ(d0.parts.size(), 2u);
  auto soc = labels_of(socle(sub_module(d0.D0)));
  auto want = D;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(soc, want);
  for (const auto& c : check_D0(d0)) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
  for (const auto& part : d0.parts) {
    EXPECT_TRUE(is_alternative(*part.ctx, part.D));
    EXPECT_TRUE(contains(part.ctx->A, part.D));
    EXPECT_EQ(ext1(part.sigma, sub_module(part.D)).dim, 0);
    std::vector<WeightLabel> others;
    for (const auto& s : D)
      if (s != part.sigma) others.push_back(s);
    EXPECT_EQ(max_submodule_avoiding(part.ctx->A_node, others).dim(), part.D.dim());
  }
}

TEST(D0, LocalCriterionAndEnlargements) {
  for (auto [p, f] : {std::pair{5, 1}, std::pair{7, 1}}) {
    const Field& F = Field::get(p, f);
    for (const auto& spec : generic_specs(F)) {
      const D0Result d0 = build_D0(F, serre_weights(F, spec));
      EXPECT_TRUE(local_criterion(d0, d0.D0).holds) << to_string(F, spec);
      const auto ens = one_step_enlargements(d0);
      EXPECT_FALSE(ens.empty());
      for (const auto& W : ens) {
        const auto lc = local_criterion(d0, W);
        EXPECT_FALSE(lc.holds);
        int mx = 0;
        for (const auto& [t, h] : lc.hom_dims) mx = std::max(mx, h);
        EXPECT_GE(mx, 2);
      }
    }
  }
}
