#include <gtest/gtest.h>

#include <algorithm>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/fitting.hpp"

using namespace gl2wb;

namespace {

std::vector<int> dims_of(const std::vector<Submodule>& parts) {
  std::vector<int> d;
  for (const auto& s : parts) d.push_back(s.dim());
  std::sort(d.begin(), d.end());
  return d;
}

// The summands must span M and meet trivially.
void expect_direct(const Module& M, const std::vector<Submodule>& parts) {
  Submodule acc = zero_sub(M);
  int total = 0;
  for (const auto& s : parts) {
    acc = sum(acc, s);
    total += s.dim();
  }
  EXPECT_EQ(total, M->dim());
  EXPECT_EQ(acc.dim(), M->dim());
}

}  // namespace

TEST(Fitting, IrreducibleIsOneSummand) {
  Rng rng(3);
  const Field& F = Field::get(5, 1);
  for (int r = 0; r <= 4; ++r) {
    Module V = sym(F, r);
    auto parts = fitting_decompose(V, rng);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].dim(), V->dim());
  }
}

TEST(Fitting, ClebschGordanV1V1) {
  Rng rng(5);
  const Field& F = Field::get(5, 1);
  Module T = tensor(sym(F, 1), sym(F, 1));
  auto parts = fitting_decompose(T, rng);
  EXPECT_EQ(dims_of(parts), (std::vector<int>{1, 3}));
  expect_direct(T, parts);
  std::vector<WeightLabel> ids;
  for (const auto& s : parts) ids.push_back(identify(sub_module(s)));
  std::sort(ids.begin(), ids.end());
  std::vector<WeightLabel> want{make_label(F, {0}, 1), make_label(F, {2}, 0)};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(ids, want);
}

TEST(Fitting, SemisimpleSumSplitsIntoWeights) {
  Rng rng(7);
  for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}}) {
    const Field& F = Field::get(p, f);
    Module M = direct_sum({sym(F, 2), det_twist(sym(F, 3), 1), sym(F, 1, f - 1)});
    auto parts = fitting_decompose(M, rng);
    expect_direct(M, parts);
    EXPECT_EQ(dims_of(parts), (std::vector<int>{2, 3, 4}));
    for (const auto& s : parts) EXPECT_TRUE(is_irreducible(sub_module(s)));
  }
}

TEST(Fitting, UniqueSummandWithPrescribedSocle) {
  Rng rng(11);
  const Field& F = Field::get(5, 1);
  const int p = 5;
  for (int r = 1; r <= p - 2; ++r) {
    Module T = tensor(sym(F, p - 1 - r), sym(F, p - 1));
    auto parts = fitting_decompose(T, rng);
    expect_direct(T, parts);
    const WeightLabel want = rr_socle_label(F, r);
    int hits = 0;
    for (const auto& s : parts) {
      Module S = sub_module(s);
      if (labels_of(socle(S)) == std::vector<WeightLabel>{want}) {
        ++hits;
        EXPECT_EQ(S->dim(), 2 * p);
      }
    }
    EXPECT_EQ(hits, 1) << "r=" << r;
  }
}
