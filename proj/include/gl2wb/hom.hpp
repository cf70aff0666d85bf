#pragma once

#include <vector>

#include "gl2wb/module.hpp"

namespace gl2wb {

/// A basis of M obtained by spinning torus-eigenvector seeds, together with
/// the generator action written in that basis.
struct SpinPresentation {
  struct Seed {
    int index;  // position in the spin basis
    Character chi;
    bool u_fixed;
  };
  Matrix B;     // rows: spin basis in standard coordinates
  Matrix Binv;  // standard coordinates from spin coordinates
  std::vector<Seed> seeds;
  std::vector<int> parent;  // -1 for seeds
  std::vector<int> via;     // generator producing the vector from its parent
  std::vector<Matrix> C;    // C[k] = B T_k B^{-1}
};

/// Basis of Hom_Gamma(M, N), each map a dim(M) x dim(N) matrix acting on
/// rows (phi(v) = v * Phi).
std::vector<Matrix> hom_space(const Module& M, const Module& N);
int hom_dim(const Module& M, const Module& N);

}  // namespace gl2wb
