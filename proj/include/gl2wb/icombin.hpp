#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gl2wb {

/// Coordinate forms of the index set: x, x+1, x-1, p-2-x, p-2-x+1, p-2-x-1.
enum class Tag { X, XPlus, XMinus, N, NPlus, NMinus };
using Lambda = std::vector<Tag>;

class NotFound : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
class NotUnique : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
class NotInI : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Affine form eps * x + delta + kappa * (p - 2), kept symbolic in p.
struct Form {
  int eps, delta, kappa;
};
Form form_of(Tag t);
bool is_reflected(Tag t);  // p-2-x family
int sign_of(Tag t);        // +1, -1 or 0 (no shift)

/// Built by extending chains along the cyclic rules.
std::vector<Lambda> enumerate_I(int f);
/// Direct rule check, written independently of enumerate_I.
bool in_I(const Lambda& lam);
/// All 6^f tag tuples filtered by in_I.
std::vector<Lambda> enumerate_I_bruteforce(int f);
Lambda identity_lambda(int f);

struct Evaluation {
  bool fake = false;
  std::vector<int> s;
};
Evaluation evaluate(int p, const Lambda& lam, const std::vector<int>& r);

std::vector<int> S_of(const Lambda& lam);
bool compatible(const Lambda& a, const Lambda& b);
/// The element of I with S = Sprime compatible with lam; scans all of I.
Lambda unique_compatible(const Lambda& lam, const std::vector<int>& Sprime);
/// nu with muc = nu o mu coordinatewise; throws NotInI if nu is not in I.
Lambda factor(const Lambda& mu, const Lambda& muc);
Lambda compose(const Lambda& nu, const Lambda& mu);

/// { unique_compatible(mu, S') : S' subset of S(mu) }, fakes included.
std::vector<Lambda> predicted_family(const Lambda& mu);
/// Genuine members of the family and their evaluations at r.
struct Predicted {
  std::vector<Lambda> genuine;
  std::vector<std::vector<int>> tuples;
  int fakes = 0;
};
Predicted predicted_constituents(int p, const std::vector<int>& r, const Lambda& mu);

std::string to_string(Tag t);
std::string to_string(const Lambda& lam);
Lambda parse_lambda(const std::string& text);

}  // namespace gl2wb
