#include <gtest/gtest.h>

#include <vector>

#include "gl2wb/field.hpp"

using gl2wb::Elem;
using gl2wb::Field;

namespace {

std::vector<int> mod(int p, int f) {
  auto m = Field::get(p, f).modulus();
  return {m.begin(), m.end()};
}

}  // namespace

TEST(Field, ConwayPolynomials) {
  EXPECT_EQ(mod(5, 1), (std::vector<int>{3, 1}));
  EXPECT_EQ(mod(7, 1), (std::vector<int>{4, 1}));
  EXPECT_EQ(mod(3, 2), (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(mod(5, 2), (std::vector<int>{2, 4, 1}));
  EXPECT_EQ(mod(7, 2), (std::vector<int>{3, 6, 1}));
  EXPECT_EQ(mod(5, 3), (std::vector<int>{3, 3, 0, 1}));
  EXPECT_EQ(mod(3, 4), (std::vector<int>{2, 0, 0, 2, 1}));
  EXPECT_EQ(mod(3, 5), (std::vector<int>{1, 2, 0, 0, 0, 1}));
  EXPECT_EQ(mod(2, 8), (std::vector<int>{1, 0, 1, 1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(Field::get(5, 2).modulus_string(), "x^2+4x+2");
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::get(4, 1), gl2wb::FieldError);
  EXPECT_THROW(Field::get(17, 2), gl2wb::FieldError);
  EXPECT_THROW(Field::get(5, 0), gl2wb::FieldError);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, TablesFormAField) {
  auto [p, f] = GetParam();
  const Field& F = Field::get(p, f);
  const int q = F.q();
  for (int a = 0; a < q; ++a) {
    Elem x = static_cast<Elem>(a);
    EXPECT_EQ(F.add(x, F.neg(x)), 0);
    EXPECT_EQ(F.mul(x, 1), x);
    if (x != 0) EXPECT_EQ(F.mul(x, F.inv(x)), 1);
    EXPECT_EQ(F.frob(x, f), x);
    for (int b = 0; b < q; b += 3) {
      Elem y = static_cast<Elem>(b);
      EXPECT_EQ(F.add(x, y), F.add(y, x));
      EXPECT_EQ(F.mul(x, y), F.mul(y, x));
      EXPECT_EQ(F.frob(F.add(x, y)), F.add(F.frob(x), F.frob(y)));
      for (int c = 1; c < q; c += 5) {
        Elem z = static_cast<Elem>(c);
        EXPECT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
        EXPECT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
      }
    }
  }
  // frobenius has order exactly f
  for (int k = 1; k < f; ++k) {
    bool moved = false;
    for (int a = 0; a < q; ++a) moved |= F.frob(static_cast<Elem>(a), k) != a;
    EXPECT_TRUE(moved);
  }
  // generator is primitive and log/exp are inverse
  for (int a = 1; a < q; ++a) EXPECT_EQ(F.exp(F.log(static_cast<Elem>(a))), a);
  EXPECT_EQ(F.pow(F.generator(), q - 1), 1);
  for (int k = 1; k < q - 1; ++k) EXPECT_NE(F.exp(k), 1);
  // prime subfield is fixed by frobenius
  for (int n = 0; n < p; ++n) EXPECT_EQ(F.frob(F.from_int(n)), F.from_int(n));
  if (f >= 2) EXPECT_EQ(F.basis(1), F.generator());
}

INSTANTIATE_TEST_SUITE_P(Small, FieldAxioms,
                         ::testing::Values(std::pair{3, 1}, std::pair{5, 1}, std::pair{7, 1}, std::pair{3, 2},
                                           std::pair{5, 2}, std::pair{7, 2}, std::pair{5, 3}, std::pair{3, 4}));
