#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl2wb/module.hpp"

namespace gl2wb {

/// (s_0, ..., s_{f-1}) (x) det^a, with a reduced to [0, q-2].
struct WeightLabel {
  std::vector<int> s;
  int a = 0;
  bool operator==(const WeightLabel&) const = default;
  auto operator<=>(const WeightLabel&) const = default;
};

class NotIrreducible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NoMatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

WeightLabel make_label(const Field& F, std::vector<int> s, long long a);
int dimension(const WeightLabel& L);
/// Exponent of the central character: diag(z, z) acts by z^e.
int central_exponent(const Field& F, const WeightLabel& L);
/// sum p^i s_i
long long digit_value(const Field& F, const std::vector<int>& s);
bool is_regular(const Field& F, const WeightLabel& L);

WeightLabel det_twist(const Field& F, const WeightLabel& L, long long c);
/// Label of the i-fold Frobenius twist.
WeightLabel frobenius_shift(const Field& F, const WeightLabel& L, int i);
WeightLabel dual_label(const Field& F, const WeightLabel& L);

struct Normalized {
  WeightLabel label;  // (s) (x) det^{-sum p^i s_i}
  int twist;          // det_twist(label, twist) gives back the input
};
Normalized normalize(const Field& F, const WeightLabel& L);
WeightLabel normalized_label(const Field& F, const std::vector<int>& s);

std::vector<WeightLabel> all_labels(const Field& F);
/// Labels whose highest-weight vector has torus character chi.
std::vector<WeightLabel> labels_with_highest_weight(const Field& F, Character chi);

/// Explicit model; instances are interned per label.
Module build_weight(const Field& F, const WeightLabel& L);
WeightLabel identify(const Module& M);

std::string to_string(const WeightLabel& L);
WeightLabel parse_label(const Field& F, const std::string& text);
std::string to_string(const std::vector<WeightLabel>& Ls);

}  // namespace gl2wb
