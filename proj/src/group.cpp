#include "gl2wb/group.hpp"

#include <deque>
#include <sstream>
#include <unordered_set>

namespace gl2wb {

GroupElement g_mul(const Field& F, const GroupElement& g, const GroupElement& h) {
  return {F.add(F.mul(g.a, h.a), F.mul(g.b, h.c)), F.add(F.mul(g.a, h.b), F.mul(g.b, h.d)),
          F.add(F.mul(g.c, h.a), F.mul(g.d, h.c)), F.add(F.mul(g.c, h.b), F.mul(g.d, h.d))};
}

Elem g_det(const Field& F, const GroupElement& g) { return F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c)); }

GroupElement g_inv(const Field& F, const GroupElement& g) {
  Elem di = F.inv(g_det(F, g));
  return {F.mul(g.d, di), F.neg(F.mul(g.b, di)), F.neg(F.mul(g.c, di)), F.mul(g.a, di)};
}

GroupElement g_frob(const Field& F, const GroupElement& g, int k) {
  return {F.frob(g.a, k), F.frob(g.b, k), F.frob(g.c, k), F.frob(g.d, k)};
}

GroupElement random_element(const Field& F, Rng& rng) {
  while (true) {
    GroupElement g{rng.elem(F), rng.elem(F), rng.elem(F), rng.elem(F)};
    if (g_det(F, g) != 0) return g;
  }
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << "[[" << int(g.a) << "," << int(g.b) << "],[" << int(g.c) << "," << int(g.d) << "]]";
  return os.str();
}

std::vector<GroupElement> generators(const Field& F) {
  std::vector<GroupElement> out;
  for (int j = 0; j < F.f(); ++j) out.push_back({1, F.basis(j), 0, 1});
  out.push_back({0, F.neg(1), 1, 0});
  out.push_back({F.generator(), 0, 0, 1});
  return out;
}

namespace {

void push_u(const Field& F, Elem b, std::vector<std::pair<int, int>>& word) {
  auto c = F.coords(b);
  for (int j = 0; j < F.f(); ++j)
    if (c[j] != 0) word.push_back({j, c[j]});
}

void push_diag(const Field& F, Elem x, Elem y, std::vector<std::pair<int, int>>& word) {
  const int w = gen_w(F), d = gen_d(F);
  int lx = F.log(x), ly = F.log(y);
  if (lx) word.push_back({d, lx});
  if (ly) {
    // diag(1, y) = w diag(y, 1) w^{-1}, and w^{-1} = w^3
    word.push_back({w, 1});
    word.push_back({d, ly});
    word.push_back({w, 3});
  }
}

}  // namespace

std::vector<std::pair<int, int>> bruhat_word(const Field& F, const GroupElement& g) {
  std::vector<std::pair<int, int>> word;
  Elem det = g_det(F, g);
  if (g.c != 0) {
    push_u(F, F.div(g.a, g.c), word);
    word.push_back({gen_w(F), 1});
    push_diag(F, g.c, F.div(det, g.c), word);
    push_u(F, F.div(g.d, g.c), word);
  } else {
    push_diag(F, g.a, g.d, word);
    push_u(F, F.div(g.b, g.a), word);
  }
  return word;
}

long long closure_order(const Field& F, const std::vector<GroupElement>& gens) {
  const int q = F.q();
  auto key = [q](const GroupElement& g) { return ((g.a * q + g.b) * q + g.c) * q + g.d; };
  std::unordered_set<long long> seen;
  std::deque<GroupElement> todo;
  GroupElement e{};
  seen.insert(key(e));
  todo.push_back(e);
  while (!todo.empty()) {
    GroupElement g = todo.front();
    todo.pop_front();
    for (const auto& s : gens) {
      GroupElement h = g_mul(F, g, s);
      if (seen.insert(key(h)).second) todo.push_back(h);
    }
  }
  return static_cast<long long>(seen.size());
}

}  // namespace gl2wb
