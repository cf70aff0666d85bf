#pragma once

#include <stdexcept>
#include <vector>

#include "gl2wb/weights.hpp"

namespace gl2wb {

class AmbiguousIdentification : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One isotypic component of a semisimple layer.
struct Isotypic {
  WeightLabel label;
  int mult = 0;
  Submodule sub;
};

std::vector<Isotypic> socle(const Module& M);
Submodule socle_sub(const Module& M);
/// Isotypic component of one weight in the socle.
Submodule isotypic(const Module& M, const WeightLabel& L);

struct CosoclePiece {
  WeightLabel label;
  int mult = 0;
};
struct Cosocle {
  std::vector<CosoclePiece> pieces;
  Submodule radical;
};
Cosocle cosocle(const Module& M);

/// Fil_0 = soc M, Fil_{i+1}/Fil_i = soc(M/Fil_i), until Fil = M.
struct SocleFiltration {
  std::vector<Submodule> fil;
  std::vector<std::vector<WeightLabel>> layers;  // sorted multisets
};
SocleFiltration socle_filtration(const Module& M);
std::vector<std::vector<WeightLabel>> socle_series(const Module& M);
std::vector<WeightLabel> composition_factors(const Module& M);
int multiplicity(const Module& M, const WeightLabel& L);
bool is_multiplicity_free(const Module& M);
bool is_irreducible(const Module& M);
/// Multiset of labels of a list of isotypic components.
std::vector<WeightLabel> labels_of(const std::vector<Isotypic>& pieces);
std::vector<WeightLabel> labels_of(const Cosocle& c);

}  // namespace gl2wb
