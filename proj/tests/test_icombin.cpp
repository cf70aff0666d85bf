#include <gtest/gtest.h>

#include <algorithm>

#include "gl2wb/constituents.hpp"
#include "gl2wb/icombin.hpp"

using namespace gl2wb;

namespace {

using T = Tag;

std::vector<Lambda> sorted(std::vector<Lambda> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(IndexSet, Sizes) {
  EXPECT_EQ(enumerate_I(1).size(), 3u);
  for (int f = 1; f <= 3; ++f) {
    const auto gen = sorted(enumerate_I(f));
    EXPECT_EQ(gen, enumerate_I_bruteforce(f)) << "f=" << f;
    EXPECT_NE(std::find(gen.begin(), gen.end(), identity_lambda(f)), gen.end());
    EXPECT_TRUE(S_of(identity_lambda(f)).empty());
    for (const auto& lam : gen) {
      EXPECT_TRUE(in_I(lam));
      EXPECT_LE(S_of(lam).size(), static_cast<size_t>(f));
    }
  }
}

TEST(IndexSet, RuleViolationsRejected) {
  EXPECT_FALSE(in_I({T::XPlus}));
  EXPECT_FALSE(in_I({T::N}));
  EXPECT_FALSE(in_I({T::X, T::XPlus}));  // x forces x or p-2-x next
  EXPECT_FALSE(in_I({T::N, T::X}));      // p-2-x forces a shifted form next
  EXPECT_TRUE(in_I({T::XPlus, T::N}));
  EXPECT_THROW(parse_lambda("x | y"), std::invalid_argument);
  for (const auto& lam : enumerate_I(3)) EXPECT_EQ(parse_lambda(to_string(lam)), lam);
}

TEST(Evaluate, Examples) {
  Evaluation e = evaluate(5, identity_lambda(2), {1, 3});
  EXPECT_FALSE(e.fake);
  EXPECT_EQ(e.s, (std::vector<int>{1, 3}));
  EXPECT_TRUE(evaluate(5, {T::NMinus}, {3}).fake);
  EXPECT_EQ(evaluate(5, {T::X}, {1}).s, std::vector<int>{1});
  EXPECT_EQ(evaluate(5, {T::NMinus}, {1}).s, std::vector<int>{1});
  EXPECT_EQ(evaluate(5, {T::NPlus}, {1}).s, std::vector<int>{3});
}

TEST(Compatibility, Examples) {
  for (const auto& lam : enumerate_I(2)) {
    EXPECT_TRUE(compatible(lam, lam));
    EXPECT_TRUE(compatible(lam, identity_lambda(2)));
  }
  EXPECT_FALSE(compatible({T::NPlus}, {T::NMinus}));
  EXPECT_EQ(S_of({T::NPlus}), std::vector<int>{0});
  // p-2-x+1 = p-2-x-(-1) carries the sign of x-1.
  EXPECT_TRUE(compatible({T::NPlus, T::NPlus}, {T::XMinus, T::N}));
  EXPECT_FALSE(compatible({T::NPlus, T::NPlus}, {T::XPlus, T::N}));
}

TEST(OneWeight, ExhaustiveUpToThree) {
  for (int f = 1; f <= 3; ++f) {
    long long pairs = 0, expected = 0;
    for (const auto& lam : enumerate_I(f)) {
      const auto S = S_of(lam);
      expected += 1LL << S.size();
      EXPECT_EQ(unique_compatible(lam, {}), identity_lambda(f));
      EXPECT_EQ(unique_compatible(lam, S), lam);
      for (const auto& mu : predicted_family(lam)) {
        EXPECT_TRUE(compatible(mu, lam));
        ++pairs;
      }
    }
    EXPECT_EQ(pairs, expected);
  }
}

TEST(Factor, Examples) {
  for (const auto& mu : enumerate_I(2)) {
    Lambda nu = factor(mu, mu);
    EXPECT_TRUE(S_of(nu).empty());
    EXPECT_EQ(compose(nu, mu), mu);
    EXPECT_EQ(factor(identity_lambda(2), mu), mu);
  }
}

TEST(Predicted, IdentityAndCounts) {
  auto id = predicted_constituents(5, {1, 1}, identity_lambda(2));
  EXPECT_EQ(id.genuine, std::vector<Lambda>{identity_lambda(2)});
  for (const auto& lam : enumerate_I(2)) {
    auto pr = predicted_constituents(5, {2, 1}, lam);
    EXPECT_EQ(pr.genuine.size() + pr.fakes, 1u << S_of(lam).size());
  }
}

// The engine decides which members of the family occur in I(sigma, tau).
TEST(Predicted, MatchesEngineAtDegreeTwo) {
  const Field& F = Field::get(5, 2);
  for (const auto& s : {std::vector<int>{1, 1}, std::vector<int>{2, 1}, std::vector<int>{1, 3}}) {
    auto ctx = sigma_context(F, normalized_label(F, s));
    const auto cmap = label_constituents(*ctx);
    ASSERT_TRUE(cmap.ok) << cmap.detail;
    for (const auto& e : cmap.entries) {
      auto info = i_sigma_tau_info(*ctx, e.label);
      ASSERT_TRUE(info.has_value());
      std::vector<WeightLabel> predicted;
      for (const auto& lam : predicted_constituents(5, ctx->r, e.lam).genuine)
        predicted.push_back(cmap.by_lambda(lam)->label);
      std::sort(predicted.begin(), predicted.end());
      auto got = info->factors;
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, predicted) << to_string(e.lam);
    }
  }
}

TEST(Auxiliary, DegenerateComplementPasses) {
  const Field& F = Field::get(5, 1);
  const WeightLabel s = normalized_label(F, {2});
  for (const auto& c : auxiliary_checks(F, s, s)) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
}
