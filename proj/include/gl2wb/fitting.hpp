#pragma once

#include <stdexcept>
#include <vector>

#include "gl2wb/module.hpp"
#include "gl2wb/rng.hpp"

namespace gl2wb {

class DecompositionInconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Splits M into indecomposable summands using random endomorphisms:
/// for phi in End(M) and c in F_q, M = ker (phi - c)^N + im (phi - c)^N.
/// A summand is accepted as indecomposable when End is 1-dimensional or
/// when `trials` random endomorphisms are each scalar plus nilpotent.
std::vector<Submodule> fitting_decompose(const Module& M, Rng& rng, int trials = 8);

}  // namespace gl2wb
