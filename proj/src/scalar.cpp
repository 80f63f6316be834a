#include "wqh/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wqh {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct FieldContext {
  long n = 1;
  long degree = 1;
  // powers[p] = coefficients of z^p (0 <= p < n) over the power basis.
  std::vector<std::vector<long>> powers;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // num and den lowest degree first, den monic.
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    long c = num[i + den.size() - 1];
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const FieldContext& field_locked(long n) {
  static std::map<long, FieldContext> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  FieldContext ctx;
  ctx.n = n;
  ctx.degree = euler_phi(n);
  const std::vector<long>& phi_poly = cyclotomic_polynomial(n);
  ctx.powers.assign(n, std::vector<long>(ctx.degree, 0));
  std::vector<long> cur(ctx.degree, 0);
  cur[0] = 1;
  for (long p = 0; p < n; ++p) {
    ctx.powers[p] = cur;
    // multiply by z and reduce
    long top = cur[ctx.degree - 1];
    for (long k = ctx.degree - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0)
      for (long k = 0; k < ctx.degree; ++k) cur[k] -= top * phi_poly[k];
  }
  return cache.emplace(n, std::move(ctx)).first->second;
}

const FieldContext& field(long n) {
  thread_local const FieldContext* last = nullptr;
  if (last != nullptr && last->n == n) return *last;
  last = &field_locked(n);
  return *last;
}

void trim(std::vector<Rational>& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

// Reduce a vector indexed by exponent mod n into the power basis of Q(zeta_n).
std::vector<Rational> reduce_exponents(long n, const std::vector<Rational>& by_exponent) {
  const FieldContext& ctx = field(n);
  std::vector<Rational> out(ctx.degree);
  for (long p = 0; p < n; ++p) {
    const Rational& c = by_exponent[p];
    if (sgn(c) == 0) continue;
    if (p < ctx.degree) {
      out[p] += c;
      continue;
    }
    const auto& row = ctx.powers[p];
    for (long k = 0; k < ctx.degree; ++k)
      if (row[k] != 0) out[k] += c * row[k];
  }
  return out;
}

// Coefficients of a value at conductor m re-expressed at conductor n (m | n).
std::vector<Rational> lift(long m, const std::vector<Rational>& coeffs, long n) {
  if (m == n) return coeffs;
  if (coeffs.size() <= 1) return coeffs;
  std::vector<Rational> by_exp(n);
  long step = n / m;
  for (size_t k = 0; k < coeffs.size(); ++k) by_exp[(k * step) % n] += coeffs[k];
  return reduce_exponents(n, by_exp);
}

// Solve A x = b over Q; returns false when inconsistent. A is rows x cols.
bool solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                    std::vector<Rational>& x) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<long> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return false;
  x.assign(cols, Rational(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return true;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace

long euler_phi(long n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

const std::vector<long>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<long>> cache;
  static std::mutex m;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(m);
  return cache.emplace(n, std::move(num)).first->second;
}

Scalar::Scalar(long v) {
  if (v != 0) coeffs_.emplace_back(v);
}

Scalar::Scalar(const Rational& q) {
  if (sgn(q) != 0) {
    coeffs_.push_back(q);
    coeffs_.back().canonicalize();
  }
}

Scalar::Scalar(std::complex<double> z) : backend_(Backend::approx), approx_(z) {}

Scalar Scalar::root_of_unity(long n, long k) {
  if (n <= 0) throw std::invalid_argument("root_of_unity: n must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  return make_scalar(n, c);
}

void Scalar::normalize() {
  if (!is_exact()) return;
  trim(coeffs_);
  // Descend while the value visibly lives in a subfield: for p^2 | n,
  // Phi_n(x) = Phi_{n/p}(x^p), so Q(zeta_{n/p}) is spanned by exponents divisible by p.
  bool changed = true;
  while (changed && coeffs_.size() > 1) {
    changed = false;
    for (long p = 2; p * p <= conductor_; ++p) {
      if (conductor_ % (p * p) != 0) continue;
      bool all = true;
      for (size_t k = 0; k < coeffs_.size() && all; ++k)
        if (k % p != 0 && sgn(coeffs_[k]) != 0) all = false;
      if (!all) continue;
      std::vector<Rational> sub((coeffs_.size() + p - 1) / p);
      for (size_t j = 0; j < sub.size(); ++j) sub[j] = coeffs_[j * p];
      conductor_ /= p;
      coeffs_ = std::move(sub);
      if (conductor_ % 4 == 2) {
        Scalar folded = make_scalar(conductor_, coeffs_);
        conductor_ = folded.conductor_;
        coeffs_ = std::move(folded.coeffs_);
      }
      changed = true;
      break;
    }
  }
  if (coeffs_.size() <= 1) conductor_ = 1;
}

bool Scalar::is_zero() const {
  if (is_exact()) return coeffs_.empty();
  return approx_ == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_one() const {
  if (is_exact()) return coeffs_.size() == 1 && coeffs_[0] == 1;
  return approx_ == std::complex<double>(1.0, 0.0);
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("Scalar::rational_value on irrational value");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

std::complex<double> Scalar::to_complex() const {
  if (!is_exact()) return approx_;
  std::complex<double> acc(0.0, 0.0);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    double ang = kTwoPi * static_cast<double>(k) / static_cast<double>(conductor_);
    acc += coeffs_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

Scalar Scalar::to_approx() const { return Scalar(to_complex()); }

std::vector<Rational> Scalar::coefficients_in(long n) const {
  if (!is_exact()) throw std::invalid_argument("coefficients_in: approximate scalar");
  if (n % conductor_ != 0) throw std::invalid_argument("coefficients_in: not a multiple of the conductor");
  auto v = lift(conductor_, coeffs_, n);
  v.resize(euler_phi(n));
  return v;
}

Scalar Scalar::minimal_field() const {
  if (!is_exact() || conductor_ == 1) return *this;
  const long n = conductor_;
  const long deg = euler_phi(n);
  std::vector<Rational> target = coeffs_;
  target.resize(deg);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0 || d % 4 == 2) continue;
    const long dd = euler_phi(d);
    std::vector<std::vector<Rational>> a(deg, std::vector<Rational>(dd));
    for (long j = 0; j < dd; ++j) {
      std::vector<Rational> e(j + 1);
      e[j] = 1;
      auto col = lift(d, e, n);
      col.resize(deg);
      for (long i = 0; i < deg; ++i) a[i][j] = col[i];
    }
    std::vector<Rational> x;
    if (solve_rational(a, target, x)) {
      Scalar out;
      out.conductor_ = d;
      out.coeffs_ = std::move(x);
      out.normalize();
      return out;
    }
  }
  return *this;
}

void Scalar::promote_for(const Scalar& other) {
  if (is_exact() && !other.is_exact()) *this = to_approx();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.is_exact())
    for (auto& c : r.coeffs_) c = -c;
  else
    r.approx_ = -r.approx_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  promote_for(o);
  if (!is_exact()) {
    approx_ += o.is_exact() ? o.to_complex() : o.approx_;
    return *this;
  }
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = o;
  if (conductor_ == o.conductor_ || o.conductor_ == 1) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  } else if (conductor_ == 1) {
    Rational c = coeffs_[0];
    coeffs_ = o.coeffs_;
    conductor_ = o.conductor_;
    coeffs_[0] += c;
  } else {
    long n = lcm_long(conductor_, o.conductor_);
    auto a = lift(conductor_, coeffs_, n);
    auto b = lift(o.conductor_, o.coeffs_, n);
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t k = 0; k < b.size(); ++k) a[k] += b[k];
    coeffs_ = std::move(a);
    conductor_ = n;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  promote_for(o);
  if (!is_exact()) {
    approx_ *= o.is_exact() ? o.to_complex() : o.approx_;
    return *this;
  }
  if (coeffs_.empty()) return *this;
  if (o.coeffs_.empty()) {
    coeffs_.clear();
    conductor_ = 1;
    return *this;
  }
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational c = coeffs_[0];
    coeffs_ = o.coeffs_;
    conductor_ = o.conductor_;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  long n = lcm_long(conductor_, o.conductor_);
  auto a = lift(conductor_, coeffs_, n);
  auto b = lift(o.conductor_, o.coeffs_, n);
  std::vector<Rational> by_exp(n);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      by_exp[(i + j) % n] += a[i] * b[j];
    }
  }
  coeffs_ = reduce_exponents(n, by_exp);
  conductor_ = n;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar::inverse of zero");
  if (!is_exact()) return Scalar(1.0 / approx_);
  if (conductor_ == 1) return Scalar(Rational(1 / coeffs_[0]));
  const long n = conductor_;
  const long deg = euler_phi(n);
  // Column j of the multiplication matrix is (this * z^j).
  std::vector<std::vector<Rational>> a(deg, std::vector<Rational>(deg));
  for (long j = 0; j < deg; ++j) {
    std::vector<Rational> by_exp(n);
    for (size_t i = 0; i < coeffs_.size(); ++i) by_exp[(i + j) % n] += coeffs_[i];
    auto col = reduce_exponents(n, by_exp);
    for (long i = 0; i < deg; ++i) a[i][j] = col[i];
  }
  std::vector<Rational> rhs(deg);
  rhs[0] = 1;
  std::vector<Rational> x;
  if (!solve_rational(a, rhs, x)) throw std::domain_error("Scalar::inverse: singular multiplication map");
  Scalar out;
  out.conductor_ = n;
  out.coeffs_ = std::move(x);
  out.normalize();
  return out;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  promote_for(o);
  if (!is_exact()) {
    approx_ /= o.is_exact() ? o.to_complex() : o.approx_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::galois(long a) const {
  if (!is_exact()) throw std::invalid_argument("galois: approximate scalar");
  if (conductor_ == 1) return *this;
  const long n = conductor_;
  if (gcd_long(((a % n) + n) % n, n) != 1) throw std::invalid_argument("galois: exponent not coprime");
  std::vector<Rational> by_exp(n);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    long e = (static_cast<long>(k) * a) % n;
    if (e < 0) e += n;
    by_exp[e] += coeffs_[k];
  }
  Scalar out;
  out.conductor_ = n;
  out.coeffs_ = reduce_exponents(n, by_exp);
  out.normalize();
  return out;
}

Scalar Scalar::conj() const {
  if (!is_exact()) return Scalar(std::conj(approx_));
  return galois(-1);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.backend_ != b.backend_) return false;
  if (!a.is_exact()) return a.approx_ == b.approx_;
  if (a.conductor_ == b.conductor_) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t k = 0; k < a.coeffs_.size(); ++k)
      if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
  }
  return (a - b).is_zero();
}

bool lex_less(const Scalar& a, const Scalar& b) {
  if (a.backend_ != b.backend_) return a.backend_ < b.backend_;
  if (!a.is_exact()) {
    if (a.approx_.real() != b.approx_.real()) return a.approx_.real() < b.approx_.real();
    return a.approx_.imag() < b.approx_.imag();
  }
  Scalar x = a.minimal_field();
  Scalar y = b.minimal_field();
  if (x.conductor_ != y.conductor_) return x.conductor_ < y.conductor_;
  size_t len = std::max(x.coeffs_.size(), y.coeffs_.size());
  for (size_t k = 0; k < len; ++k) {
    Rational p = k < x.coeffs_.size() ? x.coeffs_[k] : Rational(0);
    Rational q = k < y.coeffs_.size() ? y.coeffs_[k] : Rational(0);
    if (p != q) return p < q;
  }
  return false;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (!is_exact()) {
    os << "(" << approx_.real() << (approx_.imag() < 0 ? "" : "+") << approx_.imag() << "i)";
    return os.str();
  }
  if (coeffs_.empty()) return "0";
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    if (!first && sgn(coeffs_[k]) > 0) os << "+";
    first = false;
    if (k == 0) {
      os << coeffs_[k].get_str();
      continue;
    }
    if (coeffs_[k] == -1)
      os << "-";
    else if (coeffs_[k] != 1)
      os << coeffs_[k].get_str() << "*";
    os << "z" << conductor_;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar make_scalar(long conductor, const std::vector<Rational>& coefficients) {
  if (conductor <= 0) throw std::invalid_argument("make_scalar: conductor must be positive");
  long n = conductor;
  std::vector<Rational> by_exp(n);
  for (size_t k = 0; k < coefficients.size(); ++k) {
    Rational c = coefficients[k];
    c.canonicalize();
    by_exp[k % n] += c;
  }
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    long m = n / 2;
    std::vector<Rational> folded(m);
    for (long k = 0; k < n; ++k) {
      if (sgn(by_exp[k]) == 0) continue;
      long e = (k * ((m + 1) / 2)) % m;
      if (k % 2 == 0)
        folded[e] += by_exp[k];
      else
        folded[e] -= by_exp[k];
    }
    by_exp = std::move(folded);
    n = m;
  }
  Scalar s;
  s.conductor_ = n;
  s.coeffs_ = reduce_exponents(n, by_exp);
  s.normalize();
  return s;
}

bool scalars_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.backend() != b.backend()) throw std::invalid_argument("scalars_equal: mixed backends");
  if (a.is_exact()) return a == b;
  return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

double deviation(const Scalar& a, const Scalar& b) {
  Scalar d = a - b;
  if (d.is_exact()) {
    if (d.is_zero()) return 0.0;
    double m = std::abs(d.to_complex());
    return m > 0.0 ? m : std::numeric_limits<double>::min();
  }
  return std::abs(d.to_complex());
}

bool Tolerance::close(const Scalar& a, const Scalar& b) const {
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

}  // namespace wqh
