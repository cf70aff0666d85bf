#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/icombin.hpp"
#include "gl2wb/serre.hpp"

namespace gl2wb {

/// Constituents of A_sigma matched with elements of the index set. Matching
/// uses the evaluated tuple and the socle layer (which must equal |S|).
/// Layer-one elements are pinned to the mu_i^+- they name; remaining ties are
/// narrowed by requiring every I(sigma, tau) to have the predicted
/// constituents, and every surviving matching is kept.
struct ConstituentMap {
  struct Entry {
    Lambda lam;
    WeightLabel label;
    int layer = 0;
    bool tie = false;
  };
  std::vector<Entry> entries;  // the first surviving matching
  std::vector<std::vector<Entry>> alternatives;
  bool ok = false;
  std::string detail;

  const Entry* by_label(const WeightLabel& L) const;
  const Entry* by_lambda(const Lambda& lam) const;
};

/// I(sigma, tau) with its composition factors, memoized per context.
struct ISigmaTauInfo {
  Submodule sub;
  std::vector<WeightLabel> factors;
};
std::optional<ISigmaTauInfo> i_sigma_tau_info(const SigmaContext& ctx, const WeightLabel& tau);
/// Drops every interned R_r, sigma context and I(sigma, tau).
void reset_caches();

ConstituentMap label_constituents(const SigmaContext& ctx);

/// Closure of a Serre set under I-constituents and the complement witness.
struct SerreStructure {
  bool closed = true;
  std::vector<std::pair<WeightLabel, WeightLabel>> complements;  // (sigma, sigma^c)
  std::vector<Check> checks;
};
SerreStructure check_serre_structure(const Field& F, const std::vector<WeightLabel>& weights);

/// Regularity, unique complement and equal semisimplification for the
/// constituents of I(sigma, sigma^c), sigma^c the complement in a Serre set.
std::vector<Check> auxiliary_checks(const Field& F, const WeightLabel& sigma, const WeightLabel& sigma_c);

}  // namespace gl2wb
