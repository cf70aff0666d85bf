#include "gl2wb/weights.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include "gl2wb/hom.hpp"

namespace gl2wb {

namespace {

int modq1(const Field& F, long long x) {
  const int n = F.q() - 1;
  return static_cast<int>(((x % n) + n) % n);
}

}  // namespace

WeightLabel make_label(const Field& F, std::vector<int> s, long long a) {
  if (static_cast<int>(s.size()) != F.f()) throw std::invalid_argument("label length must equal f");
  for (int x : s)
    if (x < 0 || x > F.p() - 1) throw std::invalid_argument("label digit out of range");
  return {std::move(s), modq1(F, a)};
}

int dimension(const WeightLabel& L) {
  int d = 1;
  for (int x : L.s) d *= x + 1;
  return d;
}

long long digit_value(const Field& F, const std::vector<int>& s) {
  long long v = 0, pk = 1;
  for (int x : s) {
    v += pk * x;
    pk *= F.p();
  }
  return v;
}

int central_exponent(const Field& F, const WeightLabel& L) { return modq1(F, digit_value(F, L.s) + 2LL * L.a); }

bool is_regular(const Field& F, const WeightLabel& L) {
  return std::all_of(L.s.begin(), L.s.end(), [&](int x) { return x <= F.p() - 2; });
}

WeightLabel det_twist(const Field& F, const WeightLabel& L, long long c) { return make_label(F, L.s, L.a + c); }

WeightLabel frobenius_shift(const Field& F, const WeightLabel& L, int i) {
  const int f = F.f();
  i = ((i % f) + f) % f;
  std::vector<int> s(f);
  for (int j = 0; j < f; ++j) s[(j + i) % f] = L.s[j];
  long long a = L.a;
  for (int k = 0; k < i; ++k) a = modq1(F, a * F.p());
  return make_label(F, s, a);
}

WeightLabel dual_label(const Field& F, const WeightLabel& L) {
  return make_label(F, L.s, -static_cast<long long>(L.a) - digit_value(F, L.s));
}

Normalized normalize(const Field& F, const WeightLabel& L) {
  WeightLabel n = normalized_label(F, L.s);
  return {n, modq1(F, L.a - n.a)};
}

WeightLabel normalized_label(const Field& F, const std::vector<int>& s) { return make_label(F, s, -digit_value(F, s)); }

std::vector<WeightLabel> all_labels(const Field& F) {
  std::vector<WeightLabel> out;
  const int f = F.f(), p = F.p();
  std::vector<int> s(f, 0);
  while (true) {
    for (int a = 0; a < F.q() - 1; ++a) out.push_back({s, a});
    int k = 0;
    while (k < f && s[k] == p - 1) s[k++] = 0;
    if (k == f) break;
    ++s[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightLabel> labels_with_highest_weight(const Field& F, Character chi) {
  // X^{s_0} (x) ... (x) X^{s_{f-1}} has character (sum p^i s_i + a, a)
  const int n = F.q() - 1;
  long long diff = modq1(F, chi.a - chi.b);
  std::vector<long long> values{diff};
  if (diff == 0) values.push_back(n);
  std::vector<WeightLabel> out;
  for (long long v : values) {
    std::vector<int> s(F.f());
    long long x = v;
    for (int i = 0; i < F.f(); ++i) {
      s[i] = static_cast<int>(x % F.p());
      x /= F.p();
    }
    out.push_back(make_label(F, s, chi.b));
  }
  return out;
}

Module build_weight(const Field& F, const WeightLabel& L) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, WeightLabel>, Module> interned;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(F.p(), F.f(), L);
  auto it = interned.find(key);
  if (it != interned.end()) return it->second;
  std::vector<Module> factors;
  for (int i = 0; i < F.f(); ++i) factors.push_back(sym(F, L.s[i], i));
  Module M = det_twist(tensor(factors), L.a);
  interned.emplace(key, M);
  return M;
}

WeightLabel identify(const Module& M) {
  const Field& F = M->field();
  const Rref& U = M->u_invariants();
  if (U.rank != 1) throw NotIrreducible("module has " + std::to_string(U.rank) + " independent U-fixed vectors");
  Character chi = M->chars()[U.pivots[0]];
  bool some_hom = false;
  for (const auto& L : labels_with_highest_weight(F, chi)) {
    if (hom_dim(build_weight(F, L), M) == 0) continue;
    some_hom = true;
    if (dimension(L) == M->dim()) return L;
  }
  if (some_hom) throw NotIrreducible("module properly contains a weight");
  throw NoMatch("no weight matches the highest-weight vector");
}

std::string to_string(const WeightLabel& L) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < L.s.size(); ++i) os << (i ? "," : "") << L.s[i];
  os << ")*det^" << L.a;
  return os.str();
}

std::string to_string(const std::vector<WeightLabel>& Ls) {
  std::string out = "{";
  for (size_t i = 0; i < Ls.size(); ++i) out += (i ? ", " : "") + to_string(Ls[i]);
  return out + "}";
}

WeightLabel parse_label(const Field& F, const std::string& text) {
  static const std::regex re(R"(\s*\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\s*(?:\*\s*det\^\s*(-?\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("cannot parse weight label: " + text);
  std::vector<int> s;
  std::string digits = m[1];
  std::replace(digits.begin(), digits.end(), ',', ' ');
  std::istringstream is(digits);
  for (int x; is >> x;) s.push_back(x);
  long long a = m[2].matched ? std::stoll(m[2]) : 0;
  return make_label(F, s, a);
}

}  // namespace gl2wb
