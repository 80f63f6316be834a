#include "poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wqh/report.hpp"

namespace wqh {

Poly Poly::constant(int nvars, const Scalar& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int nvars, int v) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[v] = 1;
  p.terms_[m] = 1;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Scalar Poly::constant_value() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Scalar() : it->second;
}

std::set<int> Poly::variables() const {
  std::set<int> vs;
  for (const auto& [m, c] : terms_)
    for (int v = 0; v < nvars_; ++v)
      if (m[v]) vs.insert(v);
  return vs;
}

int Poly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

Poly operator*(const Scalar& s, const Poly& a) {
  Poly p(a.nvars_);
  if (s.is_zero()) return p;
  for (const auto& [m, c] : a.terms_) p.terms_[m] = s * c;
  return p;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return lex_less(ia->second, ib->second);
  }
  return false;
}

Poly Poly::substitute(int v, const Poly& value) const {
  Poly out(nvars_);
  std::vector<Poly> powers{Poly::constant(nvars_, 1)};
  for (const auto& [m, c] : terms_) {
    const int e = m[v];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[v] = 0;
    Poly t(nvars_);
    t.terms_[rest] = c;
    out += e == 0 ? t : t * powers[e];
  }
  return out;
}

Poly Poly::strip_monomial(const std::vector<bool>& allowed) const {
  if (terms_.empty()) return *this;
  Monomial low(nvars_, 0);
  for (int v = 0; v < nvars_; ++v) {
    if (!allowed[v]) continue;
    int e = terms_.begin()->first[v];
    for (const auto& [m, c] : terms_) e = std::min(e, m[v]);
    low[v] = e;
  }
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    for (int v = 0; v < nvars_; ++v) r[v] -= low[v];
    out.terms_[r] = c;
  }
  return out;
}

Poly Poly::normalized() const {
  if (terms_.empty()) return *this;
  return terms_.rbegin()->second.inverse() * *this;
}

std::vector<Scalar> Poly::univariate(int v) const {
  std::vector<Scalar> u(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) u[m[v]] += c;
  return u;
}

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(static_cast<long>(i)));
  trim(d);
  return d;
}

std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  UPoly bb = b;
  trim(bb);
  trim(a);
  if (bb.empty()) throw std::domain_error("divmod: division by zero polynomial");
  if (a.size() < bb.size()) return {UPoly{}, a};
  UPoly q(a.size() - bb.size() + 1);
  const Scalar lead_inv = bb.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar f = a[k + bb.size() - 1] * lead_inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < bb.size(); ++i) a[k + i] -= f * bb[i];
  }
  a.resize(bb.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

Scalar evaluate(const UPoly& p, const Scalar& x) {
  Scalar acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace {

// Best rational approximation with bounded denominator, by continued fractions.
bool rationalize(double x, long max_den, Rational& out) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(r);
    long a = static_cast<long>(fl);
    long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(static_cast<double>(h1) / k1 - x) < 1e-9) break;
    double frac = r - fl;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  if (k1 == 0 || std::abs(static_cast<double>(h1) / k1 - x) > 1e-7) return false;
  out = Rational(h1, k1);
  out.canonicalize();
  return true;
}

std::vector<std::complex<double>> numeric_roots(const UPoly& p) {
  const int m = static_cast<int>(p.size()) - 1;
  if (m < 1) return {};
  const std::complex<double> lead = p.back().to_complex();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) comp(i, m - 1) = -p[i].to_complex() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < m; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

}  // namespace

std::vector<Scalar> roots_in_cyclotomic_field(UPoly p, long n) {
  trim(p);
  if (p.size() < 2) return {};
  for (const auto& c : p)
    if (!c.is_zero()) n = lcm_long(n, c.conductor());
  if (n % 4 == 2) n /= 2;
  // squarefree part, so numeric roots are well separated
  UPoly g = gcd(p, derivative(p));
  if (g.size() > 1) p = divmod(p, g).first;
  if (p.size() == 2) return {-p[0] / p[1]};

  std::vector<long> units;
  for (long j = 1; j <= std::max(1L, n); ++j)
    if (std::gcd(j, n) == 1) units.push_back(j);
  const int phi = static_cast<int>(units.size());
  const double two_pi = 2.0 * std::acos(-1.0);
  Eigen::MatrixXcd V(phi, phi);
  for (int j = 0; j < phi; ++j)
    for (int i = 0; i < phi; ++i) V(j, i) = std::polar(1.0, two_pi * units[j] * i / n);
  Eigen::MatrixXcd Vinv = V.inverse();

  std::vector<std::vector<std::complex<double>>> conj_roots;
  for (long j : units) {
    UPoly pj;
    for (const auto& c : p) pj.push_back(c.galois(j));
    conj_roots.push_back(numeric_roots(pj));
  }
  const std::size_t m = conj_roots[0].size();
  double combos = std::pow(static_cast<double>(m), phi);
  if (combos > 4e6) throw MathError("root search over the cyclotomic field is too large");

  std::vector<Scalar> found;
  std::vector<std::size_t> pick(phi, 0);
  Eigen::VectorXcd y(phi);
  std::function<void(int)> rec = [&](int j) {
    if (j == phi) {
      Eigen::VectorXcd q = Vinv * y;
      std::vector<Rational> coeffs(phi);
      for (int i = 0; i < phi; ++i) {
        if (std::abs(q(i).imag()) > 1e-7) return;
        if (!rationalize(q(i).real(), 100000, coeffs[i])) return;
      }
      Scalar x = make_scalar(n, coeffs);
      if (!evaluate(p, x).is_zero()) return;
      for (const auto& f : found)
        if (f == x) return;
      found.push_back(x);
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      y(j) = conj_roots[j][k];
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

}  // namespace wqh
