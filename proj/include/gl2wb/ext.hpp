#pragma once

#include <stdexcept>
#include <vector>

#include "gl2wb/module.hpp"

namespace gl2wb {

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A short exact sequence 0 -> B -> X -> A -> 0 with explicit maps
/// incl (dim B x dim X) and proj (dim X x dim A).
struct ExtClass {
  Module X, B, A;
  Matrix incl, proj;
};

/// Throws std::logic_error unless the sequence is exact and equivariant.
void check_exact(const ExtClass& E);

ExtClass split_extension(const Module& A, const Module& B);
ExtClass baer_sum(const ExtClass& E, const ExtClass& E2);
/// c * [E]; c = 0 gives the split class.
ExtClass scale(const ExtClass& E, Elem c);
ExtClass negate(const ExtClass& E);
bool is_split(const ExtClass& E);
bool equivalent(const ExtClass& E, const ExtClass& E2);

/// Ext^1(S, M) computed from an embedding iota: M -> I into an injective
/// module: Ext^1(S, M) = coker(Hom(S, I) -> Hom(S, I/M)). Each class is the
/// preimage in I of the image of a map S -> I/M.
struct Ext1Result {
  int dim = 0;
  std::vector<ExtClass> classes;
  /// The maps S -> I/M spanning a complement of the image of Hom(S, I).
  std::vector<Matrix> maps;
  Submodule image_of_M;  // iota(M) inside I
};
Ext1Result ext1_in_hull(const Module& S, const Module& M, const Module& I, const Matrix& iota);

}  // namespace gl2wb
