#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gl2wb/group.hpp"
#include "gl2wb/matrix.hpp"

namespace gl2wb {

/// Torus character diag(x, y) -> x^a y^b, exponents reduced mod q-1.
struct Character {
  int a = 0, b = 0;
  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;
};

class ModuleNode;
struct SpinPresentation;
/// Modules are immutable shared nodes of a construction tree.
using Module = std::shared_ptr<const ModuleNode>;

/// A finite-dimensional representation of GL_2(F_q) over F_q.
///
/// Matrices act on row vectors: g.v = v * rho(g) where rho(gh) = rho(h) rho(g).
/// Every module keeps a basis of torus eigenvectors, so chars()[k] is the
/// character of the k-th basis vector.
class ModuleNode {
 public:
  virtual ~ModuleNode() = default;

  const Field& field() const { return *F_; }
  int dim() const { return dim_; }
  const std::vector<Character>& chars() const { return chars_; }
  const Matrix& gen(int k) const { return gens_[k]; }
  const std::vector<Matrix>& gens() const { return gens_; }
  Matrix eval(const GroupElement& g) const { return eval_impl(g); }
  virtual std::string describe() const = 0;

  /// rref basis of the invariants of the upper unipotent subgroup.
  const Rref& u_invariants() const;
  /// Spin presentation used by hom computations (built on first use).
  std::shared_ptr<const SpinPresentation> spin_presentation() const;

 protected:
  ModuleNode(const Field& F, int dim, std::vector<Character> chars) : F_(&F), dim_(dim), chars_(std::move(chars)) {}
  virtual Matrix eval_impl(const GroupElement& g) const = 0;
  virtual Matrix gen_impl(int k) const;
  /// Must be called by every factory once the node is fully built.
  void finalize();

 private:
  const Field* F_;
  int dim_;
  std::vector<Character> chars_;
  std::vector<Matrix> gens_;
  mutable std::mutex cache_mu_;
  mutable std::shared_ptr<const Rref> uinv_;
  mutable std::shared_ptr<const SpinPresentation> spin_;
  friend struct NodeAccess;
};

/// A generator-stable subspace, stored as an rref row basis. Because the
/// ambient basis consists of torus eigenvectors, so do the rref rows.
struct Submodule {
  Module ambient;
  Rref basis;

  int dim() const { return basis.rank; }
  const Matrix& rows() const { return basis.m; }
  std::vector<Character> chars() const;
};

// Construction.
Character char_of(const Field& F, long long a, long long b);
/// Sym^r(F^2) precomposed with the p^k-power Frobenius.
Module sym(const Field& F, int r, int frob = 0);
Module tensor(const Module& A, const Module& B);
Module tensor(const std::vector<Module>& factors);
Module direct_sum(const std::vector<Module>& parts);
Module frob_twist(const Module& M, int k);
Module det_twist(const Module& M, long long a);
Module dual(const Module& M);
Module sub_module(const Submodule& S);
Module quotient(const Submodule& S);
/// A module known only through its generator matrices (e.g. read from a
/// cache); general elements are evaluated through Bruhat words.
Module from_generators(const Field& F, std::vector<Matrix> gens, std::vector<Character> chars, std::string name);
Module zero_module(const Field& F);

/// Evaluation through a Bruhat word in the cached generator matrices.
Matrix eval_by_words(const ModuleNode& M, const GroupElement& g);

// Submodule calculus.
Submodule make_sub(const Module& M, const Matrix& rows);
Submodule zero_sub(const Module& M);
Submodule whole(const Module& M);
bool is_stable(const Module& M, const Matrix& rows);
/// Smallest stable subspace containing the rows of `vectors`.
Submodule spin(const Module& M, const Matrix& vectors);
Submodule sum(const Submodule& S, const Submodule& T);
Submodule meet(const Submodule& S, const Submodule& T);
bool contains(const Submodule& big, const Submodule& small);
bool equal(const Submodule& S, const Submodule& T);

/// For Q = quotient(S): map rows of the ambient into Q coordinates.
Matrix project(const Submodule& S, const Matrix& v);
/// For Q = quotient(S): preimage in the ambient of a submodule of Q.
Submodule preimage(const Submodule& S, const Submodule& inQ);
/// For a submodule T of sub_module(S): its image in S's ambient.
Submodule push_up(const Submodule& S, const Submodule& T);
/// Rows of ambient vectors lying in S, in S-coordinates.
Matrix restrict_to(const Submodule& S, const Matrix& v);
/// Submodule T of S's ambient with T inside S, as a submodule of sub_module(S) (whose node is given).
Submodule pull_down(const Submodule& S, const Module& Snode, const Submodule& T);

/// Image and kernel of a homomorphism given as a dim(M) x dim(N) matrix.
Submodule hom_image(const Module& N, const Matrix& phi);
Submodule hom_kernel(const Module& M, const Matrix& phi);
/// Equivariance on the generators.
bool is_hom(const Module& M, const Module& N, const Matrix& phi);

std::uint64_t fingerprint(const ModuleNode& M);

}  // namespace gl2wb
