#include "gl2wb/icombin.hpp"

#include <algorithm>
#include <sstream>

namespace gl2wb {

namespace {

constexpr Tag kAll[] = {Tag::X, Tag::XPlus, Tag::XMinus, Tag::N, Tag::NPlus, Tag::NMinus};

bool tag_from_form(const Form& fm, Tag& out) {
  if (fm.delta < -1 || fm.delta > 1) return false;
  if (fm.eps == 1 && fm.kappa == 0) {
    out = fm.delta == 0 ? Tag::X : fm.delta == 1 ? Tag::XPlus : Tag::XMinus;
    return true;
  }
  if (fm.eps == -1 && fm.kappa == 1) {
    out = fm.delta == 0 ? Tag::N : fm.delta == 1 ? Tag::NPlus : Tag::NMinus;
    return true;
  }
  return false;
}

void extend(int f, Lambda& cur, std::vector<Lambda>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == f) {
    // close the cycle: the rule from coordinate f-1 back to coordinate 0
    const Tag last = cur[f - 1], first = cur[0];
    const bool ok = is_reflected(last) ? sign_of(first) != 0 : (first == Tag::X || first == Tag::N);
    if (ok) out.push_back(cur);
    return;
  }
  std::vector<Tag> next;
  if (i == 0) {
    next.assign(std::begin(kAll), std::end(kAll));
  } else if (is_reflected(cur[i - 1])) {
    next = {Tag::XPlus, Tag::XMinus, Tag::NPlus, Tag::NMinus};
  } else {
    next = {Tag::X, Tag::N};
  }
  for (Tag t : next) {
    cur.push_back(t);
    extend(f, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Form form_of(Tag t) {
  switch (t) {
    case Tag::X:
      return {1, 0, 0};
    case Tag::XPlus:
      return {1, 1, 0};
    case Tag::XMinus:
      return {1, -1, 0};
    case Tag::N:
      return {-1, 0, 1};
    case Tag::NPlus:
      return {-1, 1, 1};
    case Tag::NMinus:
      return {-1, -1, 1};
  }
  return {1, 0, 0};
}

bool is_reflected(Tag t) { return t == Tag::N || t == Tag::NPlus || t == Tag::NMinus; }

int sign_of(Tag t) {
  if (t == Tag::XPlus || t == Tag::NPlus) return 1;
  if (t == Tag::XMinus || t == Tag::NMinus) return -1;
  return 0;
}

std::vector<Lambda> enumerate_I(int f) {
  if (f < 1) throw std::invalid_argument("f must be positive");
  if (f == 1) return {{Tag::X}, {Tag::NPlus}, {Tag::NMinus}};
  std::vector<Lambda> out;
  Lambda cur;
  extend(f, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_I(const Lambda& lam) {
  const int f = static_cast<int>(lam.size());
  if (f == 1) return lam[0] == Tag::X || lam[0] == Tag::NPlus || lam[0] == Tag::NMinus;
  for (int i = 0; i < f; ++i) {
    const Tag a = lam[i], b = lam[(i + 1) % f];
    const bool a_plain = a == Tag::X || a == Tag::XPlus || a == Tag::XMinus;
    if (a_plain && !(b == Tag::X || b == Tag::N)) return false;
    if (!a_plain && !(b == Tag::XPlus || b == Tag::XMinus || b == Tag::NPlus || b == Tag::NMinus)) return false;
  }
  return true;
}

std::vector<Lambda> enumerate_I_bruteforce(int f) {
  std::vector<Lambda> out;
  int total = 1;
  for (int i = 0; i < f; ++i) total *= 6;
  for (int code = 0; code < total; ++code) {
    Lambda lam(f);
    int c = code;
    for (int i = f - 1; i >= 0; --i) {
      lam[i] = kAll[c % 6];
      c /= 6;
    }
    if (in_I(lam)) out.push_back(lam);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Lambda identity_lambda(int f) { return Lambda(f, Tag::X); }

Evaluation evaluate(int p, const Lambda& lam, const std::vector<int>& r) {
  if (lam.size() != r.size()) throw std::invalid_argument("evaluate: length mismatch");
  Evaluation e;
  for (size_t i = 0; i < lam.size(); ++i) {
    Form fm = form_of(lam[i]);
    int v = fm.eps * r[i] + fm.delta + fm.kappa * (p - 2);
    if (v < 0 || v > p - 1) e.fake = true;
    e.s.push_back(v);
  }
  return e;
}

std::vector<int> S_of(const Lambda& lam) {
  std::vector<int> out;
  for (size_t i = 0; i < lam.size(); ++i)
    if (sign_of(lam[i]) != 0) out.push_back(static_cast<int>(i));
  return out;
}

// p-2-x-(+-1) pairs with x+-1, so a reflected tag counts with the opposite sign.
namespace {
int compat_sign(Tag t) { return is_reflected(t) ? -sign_of(t) : sign_of(t); }
}  // namespace

bool compatible(const Lambda& a, const Lambda& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int sa = compat_sign(a[i]), sb = compat_sign(b[i]);
    if (sa != 0 && sb != 0 && sa != sb) return false;
  }
  return true;
}

Lambda unique_compatible(const Lambda& lam, const std::vector<int>& Sprime) {
  const auto S = S_of(lam);
  for (int i : Sprime)
    if (std::find(S.begin(), S.end(), i) == S.end()) throw std::invalid_argument("S' is not a subset of S(lambda)");
  std::vector<Lambda> hits;
  for (const auto& cand : enumerate_I(static_cast<int>(lam.size())))
    if (S_of(cand) == Sprime && compatible(cand, lam)) hits.push_back(cand);
  if (hits.empty()) throw NotFound("no compatible element for " + to_string(lam));
  if (hits.size() > 1) throw NotUnique("several compatible elements for " + to_string(lam));
  return hits[0];
}

Lambda compose(const Lambda& nu, const Lambda& mu) {
  Lambda out(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) {
    Form a = form_of(nu[i]), b = form_of(mu[i]);
    Form c{a.eps * b.eps, a.eps * b.delta + a.delta, a.eps * b.kappa + a.kappa};
    if (!tag_from_form(c, out[i])) throw NotInI("composition leaves the six coordinate forms");
  }
  return out;
}

Lambda factor(const Lambda& mu, const Lambda& muc) {
  Lambda nu(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) {
    Form m = form_of(mu[i]), c = form_of(muc[i]);
    const int eps = c.eps * m.eps;
    Form n{eps, c.delta - eps * m.delta, c.kappa - eps * m.kappa};
    if (!tag_from_form(n, nu[i])) throw NotInI("coordinate " + std::to_string(i) + " of the factor is not a valid form");
  }
  if (!in_I(nu)) throw NotInI("factor " + to_string(nu) + " violates the chain rules");
  return nu;
}

std::vector<Lambda> predicted_family(const Lambda& mu) {
  const auto S = S_of(mu);
  std::vector<Lambda> out;
  for (unsigned mask = 0; mask < (1u << S.size()); ++mask) {
    std::vector<int> sub;
    for (size_t k = 0; k < S.size(); ++k)
      if (mask & (1u << k)) sub.push_back(S[k]);
    out.push_back(unique_compatible(mu, sub));
  }
  return out;
}

Predicted predicted_constituents(int p, const std::vector<int>& r, const Lambda& mu) {
  Predicted out;
  for (const auto& lam : predicted_family(mu)) {
    Evaluation e = evaluate(p, lam, r);
    if (e.fake) {
      ++out.fakes;
      continue;
    }
    out.genuine.push_back(lam);
    out.tuples.push_back(e.s);
  }
  return out;
}

std::string to_string(Tag t) {
  switch (t) {
    case Tag::X:
      return "x";
    case Tag::XPlus:
      return "x+1";
    case Tag::XMinus:
      return "x-1";
    case Tag::N:
      return "p-2-x";
    case Tag::NPlus:
      return "p-2-x+1";
    case Tag::NMinus:
      return "p-2-x-1";
  }
  return "?";
}

std::string to_string(const Lambda& lam) {
  std::string out;
  for (size_t i = 0; i < lam.size(); ++i) out += (i ? " | " : "") + to_string(lam[i]);
  return out;
}

Lambda parse_lambda(const std::string& text) {
  Lambda out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    part.erase(std::remove(part.begin(), part.end(), ' '), part.end());
    bool found = false;
    for (Tag t : kAll)
      if (to_string(t) == part) {
        out.push_back(t);
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown coordinate form '" + part + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty lambda");
  return out;
}

}  // namespace gl2wb
