#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl2wb/ext.hpp"
#include "gl2wb/structure.hpp"

namespace gl2wb {

class ExtractionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnsupportedSocle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class ExtDimension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ConditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// R_r as a summand of V_{p-1-r} (x) V_{p-1}, with W_r the kernel of the
/// cosocle map. For r = p-1, R = V_{p-1} and W is absent.
struct RrData {
  int r = 0;
  Module R;
  Submodule soc;
  std::optional<Submodule> W;
  std::uint64_t seed = 0;  // randomness used by the extraction
};
/// Interned per (p, f, r); consults the installed RrStore first.
const RrData& build_R_r(const Field& F, int r);
/// The socle V_r (x) det^{p-1-r} (as an f-tuple label) and the extraction seed.
WeightLabel rr_socle_label(const Field& F, int r);
std::uint64_t rr_seed(int r);

/// Persistent storage for extracted R_r. load returns nothing on a miss or
/// on an entry that fails verification.
class RrStore {
 public:
  virtual ~RrStore() = default;
  virtual std::optional<RrData> load(const Field& F, int r) = 0;
  virtual void save(const Field& F, const RrData& d) = 0;
};
void set_rr_store(std::shared_ptr<RrStore> store);
void clear_rr_registry();
/// Low-level extraction without interning or structural postconditions.
RrData extract_R_r(const Field& F, int r, std::uint64_t seed);

struct MuPair {
  WeightLabel plus;
  std::optional<WeightLabel> minus;
};
std::vector<MuPair> mu_weights(const Field& F, const WeightLabel& normalized_sigma);

/// Everything attached to a regular weight sigma of dimension >= 2.
/// All submodules live in R.
struct SigmaContext {
  const Field* F = nullptr;
  WeightLabel sigma;  // as requested
  WeightLabel base;   // normalized form
  int twist = 0;      // sigma = base (x) det^twist
  std::vector<int> r;
  std::vector<Module> factors;  // Frobenius-twisted R_{r_i}, before the det twist
  Module R;
  Submodule soc, A, Aprime, B, AmeetAprime;
  std::vector<Submodule> Aprime_i;
  std::vector<Submodule> Ainter;  // W_{r_i} (x) everything else
  Submodule fil1;
  /// Isotypic components of gr_1 R, each given by its preimage in R.
  struct Gr1Piece {
    WeightLabel label;
    int mult;
    Submodule preimage;
  };
  std::vector<Gr1Piece> gr1;
  std::vector<MuPair> mu;  // twisted along with sigma
  Module A_node, AmA_node, R_mod_soc;  // sub_module(A), sub_module(A meet A'), R / soc

  const Field& field() const { return *F; }
  int f() const { return static_cast<int>(r.size()); }
  /// Subspace (x)_i parts[i] of R, each part in R_{r_i} coordinates.
  Matrix kron_rows(const std::vector<Matrix>& parts) const;
  /// X_i viewed in Ext^1(sigma, A meet A'): total space (A meet A') + A'_i.
  Submodule X_total(int i) const;
};

std::shared_ptr<const SigmaContext> sigma_context(const Field& F, const WeightLabel& sigma);
/// Number of contexts currently interned (for cache statistics).
size_t sigma_context_count();
void clear_sigma_contexts();

/// Labelled socle of gr_1 M for M inside R (read through ctx.gr1).
std::vector<WeightLabel> gr1_labels(const SigmaContext& ctx, const Submodule& M);
bool is_alternative(const SigmaContext& ctx, const Submodule& M);
/// M meet A' inside A.
bool inclusion_criterion(const SigmaContext& ctx, const Submodule& M);
/// X_i as an element of Ext^1(sigma, A meet A').
ExtClass x_class(const SigmaContext& ctx, int i);
/// The embedding of Ext^1(sigma, A) = Hom(sigma, R/A): image of X_i.
Matrix ext_coordinates_of_x(const SigmaContext& ctx, int i);

// Injective hulls and their uses.
struct Hull {
  Module I;
  Matrix iota;  // dim M x dim I
  std::vector<WeightLabel> parts;
};
Hull injective_hull_embed(const Module& M, std::uint64_t seed = 1);
Ext1Result ext1(const WeightLabel& S, const Module& M);
int ext1_dim(const Field& F, const WeightLabel& tau, const WeightLabel& sigma);
/// Intersection of the kernels of all maps X -> R_tau, tau in T.
Submodule max_submodule_avoiding(const Module& X, const std::vector<WeightLabel>& T);
/// Same object by peeling socle layers away from T; needs no hulls.
Submodule max_submodule_avoiding_peel(const Module& X, const std::vector<WeightLabel>& T);
Module universal_extension(const Field& F, const WeightLabel& tau, const std::vector<WeightLabel>& sigmas);

/// I(sigma, tau): the submodule of R_sigma with cosocle tau in which sigma
/// occurs once. `via_hom` selects the image of Hom(R_tau, A_sigma); otherwise
/// the annihilator of the largest tau*-free submodule of the dual of A_sigma.
std::optional<Submodule> i_sigma_tau(const SigmaContext& ctx, const WeightLabel& tau, bool via_hom);

// D_0.
struct D0Part {
  WeightLabel sigma;
  std::shared_ptr<const SigmaContext> ctx;
  Submodule D;  // inside ctx->R
};
struct D0Result {
  std::vector<D0Part> parts;
  Module ambient;  // direct sum of the R_sigma, in the order of parts
  Submodule D0;
};
D0Result build_D0(const Field& F, const std::vector<WeightLabel>& weights);

/// Each named condition with its outcome; build_D0 itself does not throw on
/// failed conditions so that reports can show all of them.
struct Check {
  std::string name;
  bool ok;
  std::string detail;
};
std::vector<Check> check_D0(const D0Result& d0);

struct LocalCriterion {
  bool holds = false;
  std::vector<std::pair<WeightLabel, int>> hom_dims;  // per tau
};
LocalCriterion local_criterion(const D0Result& d0, const Submodule& W);
/// Preimages in the ambient of the simple summands of soc(ambient / D_0),
/// one per basis vector of each Hom(tau, -) in the socle.
std::vector<Submodule> one_step_enlargements(const D0Result& d0);

}  // namespace gl2wb
