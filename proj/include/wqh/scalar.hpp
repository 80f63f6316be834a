#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wqh {

using Rational = mpq_class;

enum class Backend { exact, approx };

/// Element of a cyclotomic field Q(zeta_n), or an approximate complex number.
///
/// Exact values are stored over the power basis 1, z, ..., z^(phi(n)-1) of
/// Q(zeta_n) with z = exp(2 pi i / n), reduced modulo the n-th cyclotomic
/// polynomial. Conductors congruent to 2 mod 4 are folded onto n/2, and values
/// whose only nonzero coefficient is the constant term are stored at conductor 1.
/// Arithmetic between different conductors lifts to the lcm.
class Scalar {
 public:
  Scalar() = default;  // exact zero
  Scalar(long v);      // NOLINT: rationals convert implicitly
  Scalar(const Rational& q);  // NOLINT
  explicit Scalar(std::complex<double> z);

  /// exp(2 pi i k / n) as an exact scalar.
  static Scalar root_of_unity(long n, long k);
  static Scalar approx(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }

  Backend backend() const { return backend_; }
  bool is_exact() const { return backend_ == Backend::exact; }
  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return is_exact() && conductor_ == 1; }
  Rational rational_value() const;  // requires is_rational()

  std::complex<double> to_complex() const;
  /// Same value on the approximate backend.
  Scalar to_approx() const;

  /// Representation over the smallest cyclotomic field containing the value.
  Scalar minimal_field() const;
  /// Coefficients in Q(zeta_n) for a multiple n of the current conductor.
  std::vector<Rational> coefficients_in(long n) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;
  /// Complex conjugate (the Galois automorphism zeta -> zeta^-1 on the exact backend).
  Scalar conj() const;
  /// Galois automorphism zeta_n -> zeta_n^a for a coprime to the conductor.
  Scalar galois(long a) const;

  /// Exact structural equality; mixed backends compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used for deterministic sorting (not a field order).
  friend bool lex_less(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  friend Scalar make_scalar(long conductor, const std::vector<Rational>& coefficients);
  void normalize();
  void promote_for(const Scalar& other);

  Backend backend_ = Backend::exact;
  long conductor_ = 1;
  std::vector<Rational> coeffs_{};  // empty means zero
  std::complex<double> approx_{};
};

bool lex_less(const Scalar& a, const Scalar& b);

/// Builds an exact scalar from power-basis coefficients c_0 + c_1 z + ... of
/// Q(zeta_n). The vector may be shorter than phi(n) or longer (it is reduced
/// modulo the cyclotomic polynomial). Throws std::invalid_argument if n == 0.
Scalar make_scalar(long conductor, const std::vector<Rational>& coefficients);

/// Exact backend ignores tol; approximate backend compares |a-b| <= tol.
/// Throws std::invalid_argument on mixed backends.
bool scalars_equal(const Scalar& a, const Scalar& b, double tol);

/// Size of the difference, used for reporting worst deviations.
double deviation(const Scalar& a, const Scalar& b);

/// Tolerance policy shared by all verifiers. A tolerance of 0 means exact.
struct Tolerance {
  double tol = 0.0;
  static constexpr double default_approx = 1e-9;
  bool close(const Scalar& a, const Scalar& b) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

long euler_phi(long n);
long lcm_long(long a, long b);
/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long n);

}  // namespace wqh
