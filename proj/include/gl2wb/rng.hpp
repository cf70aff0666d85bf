#pragma once

#include <cstdint>
#include <random>

#include "gl2wb/field.hpp"

namespace gl2wb {

/// Seeded generator with a portable reduction (standard distributions are
/// implementation defined, so reports would differ between toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  Elem elem(const Field& F) { return static_cast<Elem>(below(F.q())); }
  Elem nonzero(const Field& F) { return static_cast<Elem>(1 + below(F.q() - 1)); }
  /// Derive an independent stream, e.g. one per parameter point.
  Rng split(std::uint64_t salt) { return Rng(eng_() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gl2wb
