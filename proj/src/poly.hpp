#pragma once

#include <map>
#include <set>
#include <vector>

#include "wqh/scalar.hpp"

namespace wqh {

/// Sparse multivariate polynomial over exact scalars; exponents indexed by variable.
class Poly {
 public:
  using Monomial = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const Scalar& c);
  static Poly variable(int nvars, int v);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;
  std::set<int> variables() const;
  int degree_in(int v) const;
  std::size_t size() const { return terms_.size(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Poly& a, const Poly& b);

  /// Replaces variable v by the polynomial `value`.
  Poly substitute(int v, const Poly& value) const;
  /// Divides by the largest monomial in `allowed` variables dividing every term.
  Poly strip_monomial(const std::vector<bool>& allowed) const;
  /// Scales so that the leading term (map order) has coefficient 1.
  Poly normalized() const;
  /// Coefficients of the univariate polynomial in v, lowest degree first.
  std::vector<Scalar> univariate(int v) const;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  int nvars_ = 0;
  std::map<Monomial, Scalar> terms_;
};

/// Univariate helpers over exact scalars, coefficients lowest degree first.
using UPoly = std::vector<Scalar>;
void trim(UPoly& p);
UPoly derivative(const UPoly& p);
/// Quotient and remainder.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
Scalar evaluate(const UPoly& p, const Scalar& x);

/// Distinct roots of p lying in Q(zeta_n), found from numeric roots of all Galois
/// conjugates and certified by exact substitution.
std::vector<Scalar> roots_in_cyclotomic_field(UPoly p, long n);

}  // namespace wqh
