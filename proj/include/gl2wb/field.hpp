#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2wb {

/// Element of a small finite field, encoded by the base-p digits of its
/// coordinates in the polynomial basis 1, t, ..., t^{f-1} (constant term is
/// the least significant digit).
using Elem = std::uint8_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// GF(p^f) with full addition and multiplication tables.
///
/// The modulus is chosen deterministically from (p, f) following Conway's
/// rules: it is primitive, compatible with the moduli of all proper subfields
/// (norm condition), and least in Conway's ordering. Instances are interned,
/// so a `const Field&` stays valid for the lifetime of the program.
class Field {
 public:
  static const Field& get(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  int q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const {
    if (a == 0) throw FieldError("inverse of zero");
    return inv_[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  /// x -> x^{p^k}
  Elem frob(Elem a, int k = 1) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long n) const;
  /// Fixed primitive element (the class of t for f >= 2, the least primitive
  /// root for f = 1).
  Elem generator() const { return gen_; }
  /// gamma^k for the fixed generator gamma; k taken mod q-1.
  Elem exp(long long k) const;
  /// Discrete log base the generator; a != 0.
  int log(Elem a) const;
  /// The i-th element of the F_p-basis t^i.
  Elem basis(int i) const;
  /// Coordinates of a over F_p in the basis t^i.
  std::vector<int> coords(Elem a) const;

  /// Modulus coefficients, constant term first, monic.
  std::span<const int> modulus() const { return modulus_; }
  std::string modulus_string() const;

  /// Row of the multiplication table for c, i.e. row[x] = c*x.
  const Elem* mul_row(Elem c) const { return &mul_[c * q_]; }
  const Elem* add_row(Elem c) const { return &add_[c * q_]; }
  const Elem* add_table() const { return add_.data(); }
  const Elem* neg_table() const { return neg_.data(); }

  bool operator==(const Field& o) const { return this == &o; }

 private:
  Field(int p, int f);

  int p_, f_, q_;
  Elem gen_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_, frob_, exp_;
  std::vector<int> log_;
};

bool is_prime(int n);

}  // namespace gl2wb
