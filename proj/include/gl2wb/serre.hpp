#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gl2wb/weights.hpp"

namespace gl2wb {

/// Tame local parameter: niveau 1 (split reducible) or 2 (irreducible).
struct RhoBarSpec {
  int niveau = 1;
  std::vector<int> r;
  long long eta = 0;
  bool operator==(const RhoBarSpec&) const = default;
};

class CardinalityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class RegularityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ClosureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_generic(const Field& F, const RhoBarSpec& spec);
/// All generic specs with eta = 0, niveau 1 first, r in lexicographic order.
std::vector<RhoBarSpec> generic_specs(const Field& F);

/// Congruence search over all labels. With complement_J the subset J is
/// replaced by its complement throughout (the opposite normalization).
/// Throws CardinalityViolation or RegularityViolation.
std::vector<WeightLabel> serre_weights(const Field& F, const RhoBarSpec& spec, bool complement_J = false);
/// serre_weights of the spec twisted by c equals the twisted set.
bool twist_equivariance(const Field& F, const RhoBarSpec& spec, long long c);
/// Classical f = 1 pairs: {V_r, V_{p-3-r} (x) det^{r+1}} and {V_r, V_{p-1-r} (x) det^r}, twisted by eta.
std::vector<WeightLabel> classical_pair(const Field& F, const RhoBarSpec& spec);

std::string to_string(const Field& F, const RhoBarSpec& spec);
/// Parses "niveau=1 r=1,2 eta=0 p=5 f=2"; p and f are returned separately.
struct ParsedSpec {
  int p = 0, f = 0;
  RhoBarSpec spec;
};
ParsedSpec parse_spec(const std::string& text);

}  // namespace gl2wb
