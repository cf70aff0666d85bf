#include "gl2wb/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace gl2wb {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // coefficients over F_p, constant term first

std::vector<int> prime_factors(long long n) {
  std::vector<int> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

// Arithmetic in F_p[t]/(modulus), residues stored as length-f vectors.
struct Quotient {
  int p;
  Poly modulus;  // monic, degree f

  int deg() const { return static_cast<int>(modulus.size()) - 1; }

  Poly mul(const Poly& a, const Poly& b) const {
    const int f = deg();
    std::vector<long long> prod(2 * f, 0);
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j) prod[i + j] += static_cast<long long>(a[i]) * b[j];
    for (auto& c : prod) c %= p;
    for (int k = 2 * f - 2; k >= f; --k) {
      long long c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < f; ++i) prod[k - f + i] = ((prod[k - f + i] - c * modulus[i]) % p + p) % p;
    }
    Poly out(f);
    for (int i = 0; i < f; ++i) out[i] = static_cast<int>(prod[i]);
    return out;
  }

  Poly pow(Poly a, long long e) const {
    Poly r(deg(), 0);
    r[0] = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Poly t() const {
    Poly x(deg(), 0);
    if (deg() == 1) {
      x[0] = ((-modulus[0]) % p + p) % p;
    } else {
      x[1] = 1;
    }
    return x;
  }

  bool is_one(const Poly& a) const {
    if (a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
      if (a[i] != 0) return false;
    return true;
  }

  bool is_zero(const Poly& a) const {
    for (int c : a)
      if (c != 0) return false;
    return true;
  }
};

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Poly conway(int p, int f);

// Conway ordering: x^f - c1 x^{f-1} + c2 x^{f-2} - ... with (c1, ..., cf)
// compared lexicographically.
Poly poly_from_conway_digits(int p, const std::vector<int>& c) {
  const int f = static_cast<int>(c.size());
  Poly m(f + 1, 0);
  m[f] = 1;
  for (int k = 1; k <= f; ++k) {
    int sign = (k % 2 == 1) ? -1 : 1;
    m[f - k] = ((sign * c[k - 1]) % p + p) % p;
  }
  return m;
}

bool compatible_and_primitive(int p, const Poly& m) {
  Quotient Q{p, m};
  const int f = Q.deg();
  const long long order = ipow(p, f) - 1;
  Poly x = Q.t();
  if (!Q.is_one(Q.pow(x, order))) return false;
  for (int l : prime_factors(order))
    if (Q.is_one(Q.pow(x, order / l))) return false;
  for (int d = 1; d < f; ++d) {
    if (f % d != 0) continue;
    Poly sub = conway(p, d);
    Poly y = Q.pow(x, order / (ipow(p, d) - 1));
    // evaluate sub at y
    Poly acc(f, 0);
    Poly ypow(f, 0);
    ypow[0] = 1;
    for (size_t k = 0; k < sub.size(); ++k) {
      for (int i = 0; i < f; ++i) acc[i] = (acc[i] + sub[k] * ypow[i]) % p;
      ypow = Q.mul(ypow, y);
    }
    if (!Q.is_zero(acc)) return false;
  }
  return true;
}

Poly conway(int p, int f) {
  static std::map<std::pair<int, int>, Poly> memo;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  auto it = memo.find({p, f});
  if (it != memo.end()) return it->second;
  std::vector<int> c(f, 0);
  while (true) {
    Poly m = poly_from_conway_digits(p, c);
    if (compatible_and_primitive(p, m)) {
      memo[{p, f}] = m;
      return m;
    }
    // next digit vector, last digit fastest
    int k = f - 1;
    while (k >= 0 && c[k] == p - 1) c[k--] = 0;
    if (k < 0) throw FieldError("no Conway polynomial found");
    ++c[k];
  }
}

}  // namespace

const Field& Field::get(int p, int f) {
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> registry;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = registry.find({p, f});
  if (it != registry.end()) return *it->second;
  auto field = std::unique_ptr<Field>(new Field(p, f));
  auto& ref = *field;
  registry.emplace(std::make_pair(p, f), std::move(field));
  return ref;
}

Field::Field(int p, int f) : p_(p), f_(f) {
  if (!is_prime(p)) throw FieldError("characteristic must be prime");
  if (f < 1) throw FieldError("extension degree must be positive");
  long long q = ipow(p, f);
  if (q > 256) throw FieldError("field too large for byte encoding");
  q_ = static_cast<int>(q);
  modulus_ = conway(p, f);

  Quotient Q{p, modulus_};
  auto to_poly = [&](int a) {
    Poly v(f, 0);
    for (int i = 0; i < f; ++i) {
      v[i] = a % p;
      a /= p;
    }
    return v;
  };
  auto from_poly = [&](const Poly& v) {
    int a = 0;
    for (int i = f - 1; i >= 0; --i) a = a * p + v[i];
    return static_cast<Elem>(a);
  };
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);
  std::vector<Poly> polys(q_);
  for (int a = 0; a < q_; ++a) polys[a] = to_poly(a);
  for (int a = 0; a < q_; ++a) {
    Poly n(f);
    for (int i = 0; i < f; ++i) n[i] = (p - polys[a][i]) % p;
    neg_[a] = from_poly(n);
    for (int b = 0; b < q_; ++b) {
      Poly s(f);
      for (int i = 0; i < f; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
      add_[a * q_ + b] = from_poly(s);
      if (f == 1) {
        mul_[a * q_ + b] = static_cast<Elem>((a * b) % p);
      } else {
        mul_[a * q_ + b] = from_poly(Q.mul(polys[a], polys[b]));
      }
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
  gen_ = from_poly(Q.t());
  exp_.resize(q_ - 1);
  log_.assign(q_, -1);
  Elem x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul(x, gen_);
  }
  if (x != 1) throw FieldError("generator is not primitive");
  for (int a = 0; a < q_; ++a) {
    Elem r = 1;
    for (int k = 0; k < p; ++k) r = mul(r, static_cast<Elem>(a));
    frob_[a] = r;
  }
}

Elem Field::pow(Elem a, long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  long long m = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (((e % m) + m) % m)) % m;
  return exp_[k];
}

Elem Field::frob(Elem a, int k) const {
  k = ((k % f_) + f_) % f_;
  for (int i = 0; i < k; ++i) a = frob_[a];
  return a;
}

Elem Field::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return static_cast<Elem>(r);
}

Elem Field::exp(long long k) const {
  long long m = q_ - 1;
  return exp_[((k % m) + m) % m];
}

int Field::log(Elem a) const {
  if (a == 0) throw FieldError("log of zero");
  return log_[a];
}

Elem Field::basis(int i) const {
  int a = 1;
  for (int k = 0; k < i; ++k) a *= p_;
  return static_cast<Elem>(a);
}

std::vector<int> Field::coords(Elem a) const {
  std::vector<int> v(f_);
  int x = a;
  for (int i = 0; i < f_; ++i) {
    v[i] = x % p_;
    x /= p_;
  }
  return v;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = f_; k >= 0; --k) {
    int c = modulus_[k];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace gl2wb
