#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gl2wb/field.hpp"
#include "gl2wb/rng.hpp"

namespace gl2wb {

/// [[a, b], [c, d]] in GL_2(F_q).
struct GroupElement {
  Elem a = 1, b = 0, c = 0, d = 1;
  bool operator==(const GroupElement&) const = default;
};

GroupElement g_mul(const Field& F, const GroupElement& g, const GroupElement& h);
GroupElement g_inv(const Field& F, const GroupElement& g);
Elem g_det(const Field& F, const GroupElement& g);
/// Entrywise x -> x^{p^k}.
GroupElement g_frob(const Field& F, const GroupElement& g, int k);
GroupElement random_element(const Field& F, Rng& rng);
std::string to_string(const GroupElement& g);

/// Fixed generating set: u_j = [[1, t^j], [0, 1]] for j < f, then
/// w = [[0, -1], [1, 0]], then d = [[gamma, 0], [0, 1]].
std::vector<GroupElement> generators(const Field& F);
inline int gen_w(const Field& F) { return F.f(); }
inline int gen_d(const Field& F) { return F.f() + 1; }
inline int num_generators(const Field& F) { return F.f() + 2; }

/// g as a product of nonnegative powers of the generators (left to right).
std::vector<std::pair<int, int>> bruhat_word(const Field& F, const GroupElement& g);

/// |<gens>| by breadth-first closure; only sensible for tiny q.
long long closure_order(const Field& F, const std::vector<GroupElement>& gens);

}  // namespace gl2wb
