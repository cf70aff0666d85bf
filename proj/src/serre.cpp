#include "gl2wb/serre.hpp"

#include <algorithm>
#include <sstream>

namespace gl2wb {

namespace {

long long pmod(long long a, long long m) { return ((a % m) + m) % m; }

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_generic(const Field& F, const RhoBarSpec& spec) {
  const int p = F.p(), f = F.f();
  if (static_cast<int>(spec.r.size()) != f) return false;
  if (spec.niveau == 1) {
    if (p < 5) return false;
    bool all0 = true, allTop = true;
    for (int x : spec.r) {
      if (x < 0 || x > p - 3) return false;
      all0 = all0 && x == 0;
      allTop = allTop && x == p - 3;
    }
    return !all0 && !allTop;
  }
  if (spec.niveau == 2) {
    if (spec.r[0] < 1 || spec.r[0] > p - 2) return false;
    for (int i = 1; i < f; ++i)
      if (spec.r[i] < 0 || spec.r[i] > p - 3) return false;
    return true;
  }
  return false;
}

std::vector<RhoBarSpec> generic_specs(const Field& F) {
  const int p = F.p(), f = F.f();
  std::vector<RhoBarSpec> out;
  for (int niveau = 1; niveau <= 2; ++niveau) {
    std::vector<int> r(f, 0);
    while (true) {
      RhoBarSpec s{niveau, r, 0};
      if (is_generic(F, s)) out.push_back(s);
      int k = f - 1;
      while (k >= 0 && r[k] == p - 1) r[k--] = 0;
      if (k < 0) break;
      ++r[k];
    }
  }
  return out;
}

std::vector<WeightLabel> serre_weights(const Field& F, const RhoBarSpec& spec, bool complement_J) {
  if (!is_generic(F, spec)) throw std::invalid_argument("spec is not generic: " + to_string(F, spec));
  const int p = F.p(), f = F.f();
  const long long q1 = F.q() - 1;
  std::vector<long long> pw(f);
  for (int i = 0; i < f; ++i) pw[i] = ipow(p, i);
  long long top = 0;
  for (int i = 0; i < f; ++i) top += pw[i] * (spec.r[i] + 1);
  std::vector<WeightLabel> out;
  const int nJ = 1 << f;
  for (const auto& L : all_labels(F)) {
    const long long c = L.a;
    bool accept = false;
    for (int J = 0; J < nJ && !accept; ++J) {
      const int Juse = complement_J ? (nJ - 1) ^ J : J;
      long long in = 0, outJ = 0;
      for (int i = 0; i < f; ++i) (Juse & (1 << i) ? in : outJ) += pw[i] * (L.s[i] + 1);
      if (spec.niveau == 1) {
        const long long A = pmod(top + spec.eta, q1), B = pmod(spec.eta, q1);
        const long long x = pmod(c + in, q1), y = pmod(c + outJ, q1);
        accept = (x == A && y == B) || (x == B && y == A);
      } else {
        const long long pf = ipow(p, f), m2 = pf * pf - 1;
        const long long M = pmod(top + (1 + pf) * spec.eta, m2);
        const long long v = pmod(c * (1 + pf) + in + pf * outJ, m2);
        accept = v == M || v == pmod(pf * M, m2);
      }
    }
    if (accept) out.push_back(L);
  }
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) != (1 << f))
    throw CardinalityViolation(to_string(F, spec) + " gives " + std::to_string(out.size()) + " weights: " + to_string(out));
  for (const auto& L : out)
    if (!is_regular(F, L) || dimension(L) < 2)
      throw RegularityViolation(to_string(F, spec) + " gives " + to_string(L));
  return out;
}

bool twist_equivariance(const Field& F, const RhoBarSpec& spec, long long c) {
  RhoBarSpec tw = spec;
  tw.eta = spec.eta + c;
  auto lhs = serre_weights(F, tw);
  std::vector<WeightLabel> rhs;
  for (const auto& L : serre_weights(F, spec)) rhs.push_back(det_twist(F, L, c));
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

std::vector<WeightLabel> classical_pair(const Field& F, const RhoBarSpec& spec) {
  if (F.f() != 1) throw std::invalid_argument("classical pairs are for f = 1");
  const int p = F.p(), r = spec.r[0];
  std::vector<WeightLabel> out;
  out.push_back(make_label(F, {r}, spec.eta));
  if (spec.niveau == 1)
    out.push_back(make_label(F, {p - 3 - r}, r + 1 + spec.eta));
  else
    out.push_back(make_label(F, {p - 1 - r}, r + spec.eta));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Field& F, const RhoBarSpec& spec) {
  std::ostringstream os;
  os << "niveau=" << spec.niveau << " r=";
  for (size_t i = 0; i < spec.r.size(); ++i) os << (i ? "," : "") << spec.r[i];
  os << " eta=" << spec.eta << " p=" << F.p() << " f=" << F.f();
  return os.str();
}

ParsedSpec parse_spec(const std::string& text) {
  ParsedSpec out;
  std::stringstream ss(text);
  std::string tok;
  bool have_r = false;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed token '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "niveau") {
      out.spec.niveau = std::stoi(val);
    } else if (key == "r") {
      std::stringstream rs(val);
      std::string x;
      while (std::getline(rs, x, ',')) out.spec.r.push_back(std::stoi(x));
      have_r = true;
    } else if (key == "eta") {
      out.spec.eta = std::stoll(val);
    } else if (key == "p") {
      out.p = std::stoi(val);
    } else if (key == "f") {
      out.f = std::stoi(val);
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  if (!have_r || out.p == 0) throw std::invalid_argument("spec needs r= and p=");
  if (out.f == 0) out.f = static_cast<int>(out.spec.r.size());
  if (static_cast<int>(out.spec.r.size()) != out.f) throw std::invalid_argument("r has the wrong length");
  if (out.spec.niveau != 1 && out.spec.niveau != 2) throw std::invalid_argument("niveau must be 1 or 2");
  for (int x : out.spec.r)
    if (x < 0 || x > out.p - 1) throw std::invalid_argument("r_i must lie in [0, p-1]");
  return out;
}

}  // namespace gl2wb
