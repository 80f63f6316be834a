#include "wqh/solver.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>

#include "poly.hpp"
#include "wqh/catalog.hpp"

namespace wqh {

namespace {

// Depth-first solver for a polynomial system: linear elimination, univariate
// roots in the designated field, zero branches of monomial equations, and
// resultants when nothing else applies.
class SystemSolver {
 public:
  SystemSolver(int nvars, long conductor, std::vector<bool> nonzero)
      : nvars_(nvars), conductor_(conductor), nonzero_(std::move(nonzero)) {}

  void run(std::vector<Poly> eqs, std::vector<std::optional<Poly>> assigned, int resultants = 0) {
    while (true) {
      std::set<Poly> uniq;
      for (const auto& e : eqs) {
        Poly s = e.strip_monomial(nonzero_).normalized();
        if (s.is_zero()) continue;
        if (s.is_constant()) return;
        uniq.insert(std::move(s));
      }
      eqs.assign(uniq.begin(), uniq.end());
      for (int v = 0; v < nvars_; ++v)
        if (assigned[v] && nonzero_[v] && assigned[v]->is_zero()) return;
      if (eqs.empty()) return finish(assigned);

      if (auto lin = find_linear(eqs)) {
        auto [i, x] = *lin;
        Monomial mx(nvars_, 0);
        mx[x] = 1;
        const Scalar c = eqs[i].terms().at(mx);
        Poly rest = eqs[i] - c * Poly::variable(nvars_, x);
        assign(eqs, assigned, x, (-c.inverse()) * rest);
        continue;
      }

      int best = -1, best_var = -1, best_deg = 0;
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        auto vs = eqs[i].variables();
        if (vs.size() != 1) continue;
        int v = *vs.begin();
        int d = eqs[i].degree_in(v);
        if (best < 0 || d < best_deg) {
          best = static_cast<int>(i);
          best_var = v;
          best_deg = d;
        }
      }
      if (best >= 0) {
        for (const auto& root : roots_in_cyclotomic_field(eqs[best].univariate(best_var), conductor_)) {
          if (root.is_zero() && nonzero_[best_var]) continue;
          auto e2 = eqs;
          auto a2 = assigned;
          assign(e2, a2, best_var, Poly::constant(nvars_, root));
          run(std::move(e2), std::move(a2), resultants);
        }
        return;
      }

      for (const auto& e : eqs)
        if (e.size() == 1) {
          for (int v : e.variables()) {
            if (nonzero_[v]) continue;
            auto e2 = eqs;
            auto a2 = assigned;
            assign(e2, a2, v, Poly(nvars_));
            run(std::move(e2), std::move(a2), resultants);
          }
          return;
        }

      if (resultants < 64) {
        if (auto res = eliminate(eqs)) {
          eqs.push_back(*res);
          ++resultants;
          continue;
        }
      }
      ++stuck;
      return;
    }
  }

  /// Solutions in lexicographic order of their values.
  void sort_solutions() {
    std::sort(solutions.begin(), solutions.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
    });
  }

  std::vector<std::vector<Scalar>> solutions;
  int underdetermined = 0;
  int stuck = 0;

 private:
  using Monomial = Poly::Monomial;

  void assign(std::vector<Poly>& eqs, std::vector<std::optional<Poly>>& assigned, int x, const Poly& value) {
    for (auto& e : eqs) e = e.substitute(x, value);
    for (auto& a : assigned)
      if (a) *a = a->substitute(x, value);
    assigned[x] = value;
  }

  // (equation index, variable) with the variable appearing only as c * x.
  std::optional<std::pair<std::size_t, int>> find_linear(const std::vector<Poly>& eqs) const {
    std::optional<std::pair<std::size_t, int>> best;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < eqs.size(); ++i)
      for (int x : eqs[i].variables()) {
        int count = 0;
        bool pure = true;
        for (const auto& [m, c] : eqs[i].terms()) {
          if (m[x] == 0) continue;
          ++count;
          for (int v = 0; v < nvars_; ++v)
            if (v == x ? m[v] != 1 : m[v] != 0) pure = false;
        }
        if (count == 1 && pure && (!best || eqs[i].size() < best_size)) {
          best = std::make_pair(i, x);
          best_size = eqs[i].size();
        }
      }
    return best;
  }

  // Determinant by cofactor expansion; matrices here are at most 6x6.
  Poly det(const std::vector<std::vector<Poly>>& m) const {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc(nvars_);
    for (std::size_t j = 0; j < n; ++j) {
      if (m[0][j].is_zero()) continue;
      std::vector<std::vector<Poly>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<Poly> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(m[i][k]);
        minor.push_back(std::move(row));
      }
      Poly t = m[0][j] * det(minor);
      if (j % 2) acc -= t;
      else acc += t;
    }
    return acc;
  }

  // Coefficients of p as a polynomial in x, lowest degree first.
  std::vector<Poly> coefficients(const Poly& p, int x) const {
    std::vector<Poly> out(p.degree_in(x) + 1, Poly(nvars_));
    for (const auto& [m, c] : p.terms()) {
      Monomial r = m;
      r[x] = 0;
      Poly t(nvars_);
      t += c * monomial(r);
      out[m[x]] += t;
    }
    return out;
  }

  Poly monomial(const Monomial& m) const {
    Poly p = Poly::constant(nvars_, 1);
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < m[v]; ++e) p = p * Poly::variable(nvars_, v);
    return p;
  }

  Poly resultant(const Poly& p, const Poly& q, int x) const {
    auto a = coefficients(p, x), b = coefficients(q, x);
    const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
    std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size, Poly(nvars_)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k <= m; ++k) syl[i][i + k] = a[m - k];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k <= n; ++k) syl[n + i][i + k] = b[n - k];
    return det(syl);
  }

  // Eliminates a shared variable between the two smallest compatible equations.
  std::optional<Poly> eliminate(const std::vector<Poly>& eqs) const {
    std::set<Poly> known(eqs.begin(), eqs.end());
    for (std::size_t i = 0; i < eqs.size(); ++i)
      for (std::size_t j = i + 1; j < eqs.size(); ++j)
        for (int x : eqs[i].variables()) {
          if (!eqs[j].variables().count(x)) continue;
          if (eqs[i].degree_in(x) + eqs[j].degree_in(x) > 6) continue;
          Poly r = resultant(eqs[i], eqs[j], x).strip_monomial(nonzero_).normalized();
          if (r.is_zero() || known.count(r)) continue;
          return r;
        }
    return std::nullopt;
  }

  void finish(const std::vector<std::optional<Poly>>& assigned) {
    std::vector<Scalar> values(nvars_);
    for (int v = 0; v < nvars_; ++v) {
      if (!assigned[v] || !assigned[v]->is_constant()) {
        ++underdetermined;
        return;
      }
      values[v] = assigned[v]->constant_value();
      if (nonzero_[v] && values[v].is_zero()) return;
    }
    for (const auto& s : solutions)
      if (s == values) return;
    solutions.push_back(std::move(values));
  }

  int nvars_;
  long conductor_;
  std::vector<bool> nonzero_;
};

int channel_index(const std::vector<FChannel>& chans, int label) {
  for (std::size_t i = 0; i < chans.size(); ++i)
    if (chans[i].label == label) return static_cast<int>(i);
  return -1;
}

void check_ring(const FusionRing& ring) {
  if (ring.rank() > 3) throw InputError("solver: rank above 3 is out of scope");
  if (!ring.multiplicity_free()) throw InputError("solver: fusion multiplicities above 1 are out of scope");
}

}  // namespace

SolverResult solve_pentagon_small(const FusionRing& ring, const SolverOptions& opt) {
  check_ring(ring);
  const int r = ring.rank();
  auto adm = [&](int a, int b, int c) { return ring.N(a, b, c) > 0; };
  SolverResult result;

  // unknown F^{abc}_d[e,f] for a, b, c nonunit and admissible channels
  std::map<std::array<int, 6>, int> var;
  std::vector<std::array<int, 6>> keys;
  std::vector<bool> scalar_block;
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      for (int c = 1; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          std::vector<int> es, fs;
          for (int e = 0; e < r; ++e)
            if (adm(a, b, e) && adm(e, c, d)) es.push_back(e);
          for (int f = 0; f < r; ++f)
            if (adm(b, c, f) && adm(a, f, d)) fs.push_back(f);
          for (int e : es)
            for (int f : fs) {
              std::array<int, 6> k{a, b, c, d, e, f};
              var[k] = static_cast<int>(keys.size());
              keys.push_back(k);
              scalar_block.push_back(es.size() == 1);
            }
        }
  const int nv = static_cast<int>(keys.size());

  // gauge u^{ab}_c for nonunit a, b; F^{abc}_d[e,f] scales by u^{ab}_e u^{ec}_d / (u^{bc}_f u^{af}_d)
  std::map<std::array<int, 3>, int> gauge;
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (adm(a, b, c)) gauge[{a, b, c}] = static_cast<int>(gauge.size());
  auto gauge_vector = [&](const std::array<int, 6>& k) {
    std::vector<long> g(gauge.size(), 0);
    auto bump = [&](int x, int y, int z, long s) {
      auto it = gauge.find({x, y, z});
      if (it != gauge.end()) g[it->second] += s;
    };
    auto [a, b, c, d, e, f] = k;
    bump(a, b, e, 1);
    bump(e, c, d, 1);
    bump(b, c, f, -1);
    bump(a, f, d, -1);
    return g;
  };
  std::vector<int> order;
  for (int v = 0; v < nv; ++v)
    if (scalar_block[v]) order.push_back(v);
  for (int v = 0; v < nv; ++v)
    if (!scalar_block[v]) order.push_back(v);
  std::vector<std::vector<long>> chosen;
  std::vector<std::optional<Poly>> assigned(nv);
  for (int v : order) {
    auto g = gauge_vector(keys[v]);
    auto trial = chosen;
    trial.push_back(g);
    Matrix m(trial.size(), gauge.size());
    for (std::size_t i = 0; i < trial.size(); ++i)
      for (std::size_t j = 0; j < gauge.size(); ++j) m(i, j) = trial[i][j];
    if (rank(m) == trial.size()) {
      chosen.push_back(g);
      assigned[v] = Poly::constant(nv, 1);
      ++result.gauge_fixed;
    }
  }
  result.unknowns = nv - result.gauge_fixed;
  if (result.unknowns > opt.max_unknowns)
    throw InputError("solver: " + std::to_string(result.unknowns) + " unknowns exceed the limit");

  auto F = [&](int a, int b, int c, int d, int e, int f) -> Poly {
    if (!(adm(a, b, e) && adm(e, c, d) && adm(b, c, f) && adm(a, f, d))) return Poly(nv);
    if (a == 0 || b == 0 || c == 0) return Poly::constant(nv, 1);
    int v = var.at({a, b, c, d, e, f});
    return assigned[v] ? *assigned[v] : Poly::variable(nv, v);
  };

  // F^{fcd}_x[k,h] F^{abh}_x[f,g] = sum_l F^{abc}_k[f,l] F^{ald}_x[k,g] F^{bcd}_g[l,h]
  std::vector<Poly> eqs;
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      for (int c = 1; c < r; ++c)
        for (int d = 1; d < r; ++d)
          for (int x = 0; x < r; ++x)
            for (int h = 0; h < r; ++h)
              for (int g = 0; g < r; ++g) {
                if (!(adm(c, d, h) && adm(b, h, g) && adm(a, g, x))) continue;
                for (int f = 0; f < r; ++f)
                  for (int k = 0; k < r; ++k) {
                    if (!(adm(a, b, f) && adm(f, c, k) && adm(k, d, x))) continue;
                    Poly lhs = F(f, c, d, x, k, h) * F(a, b, h, x, f, g);
                    Poly rhs(nv);
                    for (int l = 0; l < r; ++l) rhs += F(a, b, c, k, f, l) * F(a, l, d, x, k, g) * F(b, c, d, g, l, h);
                    Poly eq = lhs - rhs;
                    if (!eq.is_zero()) eqs.push_back(std::move(eq));
                  }
              }

  std::vector<bool> nonzero = scalar_block;
  for (int v = 0; v < nv; ++v)
    if (assigned[v]) nonzero[v] = true;
  SystemSolver solver(nv, opt.conductor, nonzero);
  solver.run(eqs, assigned);
  solver.sort_solutions();
  if (solver.underdetermined) result.notes.push_back("positive-dimensional branches skipped: " +
                                                     std::to_string(solver.underdetermined));
  if (solver.stuck) result.notes.push_back("branches without progress: " + std::to_string(solver.stuck));

  for (const auto& values : solver.solutions) {
    CategoryData cat;
    cat.name = "pentagon-solution-" + std::to_string(result.solutions.size());
    cat.ring = ring;
    bool invertible = true;
    for (int a = 1; a < r && invertible; ++a)
      for (int b = 1; b < r && invertible; ++b)
        for (int c = 1; c < r && invertible; ++c)
          for (int d = 0; d < r && invertible; ++d) {
            auto left = f_left_channels(ring, a, b, c, d);
            auto right = f_right_channels(ring, a, b, c, d);
            if (left.empty()) continue;
            Matrix m(left.size(), right.size());
            for (std::size_t i = 0; i < left.size(); ++i)
              for (std::size_t j = 0; j < right.size(); ++j)
                m(i, j) = values[var.at({a, b, c, d, left[i].label, right[j].label})];
            invertible = inverse(m).has_value();
            cat.F[{a, b, c, d}] = std::move(m);
          }
    if (!invertible) continue;
    cat.fill_defaults();
    if (!verify_pentagon(cat).ok()) {
      result.notes.push_back("discarded a candidate failing the pentagon re-check");
      continue;
    }
    result.solutions.push_back(std::move(cat));
  }
  return result;
}

SolverResult solve_hexagon_small(const CategoryData& base, const SolverOptions& opt) {
  const FusionRing& ring = base.ring;
  check_ring(ring);
  const int r = ring.rank();
  auto adm = [&](int a, int b, int c) { return ring.N(a, b, c) > 0; };
  SolverResult result;

  std::map<std::array<int, 3>, int> var;
  std::vector<std::array<int, 3>> keys;
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (adm(a, b, c)) {
          var[{a, b, c}] = static_cast<int>(keys.size());
          keys.push_back({a, b, c});
        }
  const int nv = static_cast<int>(keys.size());
  result.unknowns = nv;
  if (nv > opt.max_unknowns) throw InputError("solver: too many R unknowns");

  auto R = [&](int a, int b, int c) -> Poly {
    if (!adm(a, b, c)) return Poly(nv);
    if (a == 0 || b == 0) return Poly::constant(nv, 1);
    return Poly::variable(nv, var.at({a, b, c}));
  };
  // F^{abc}_d[e,f] and (F^{abc}_d)^{-1}[f,e] looked up by channel label
  std::map<std::array<int, 4>, Matrix> inv_cache;
  auto Fv = [&](int a, int b, int c, int d, int e, int f) -> Scalar {
    int i = channel_index(f_left_channels(ring, a, b, c, d), e);
    int j = channel_index(f_right_channels(ring, a, b, c, d), f);
    if (i < 0 || j < 0) return Scalar();
    return base.fmatrix(a, b, c, d)(i, j);
  };
  auto Finv = [&](int a, int b, int c, int d, int f, int e) -> Scalar {
    int i = channel_index(f_left_channels(ring, a, b, c, d), e);
    int j = channel_index(f_right_channels(ring, a, b, c, d), f);
    if (i < 0 || j < 0) return Scalar();
    auto it = inv_cache.find({a, b, c, d});
    if (it == inv_cache.end()) {
      auto inv = inverse(base.fmatrix(a, b, c, d));
      if (!inv) throw InputError("solver: singular F-matrix");
      it = inv_cache.emplace(std::array<int, 4>{a, b, c, d}, *inv).first;
    }
    return it->second(j, i);
  };

  std::vector<Poly> eqs;
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      for (int c = 1; c < r; ++c)
        for (int x = 0; x < r; ++x) {
          // delta_{hf} R^{af}_x = sum_{e,g} F^{bca}_x[h,g] R^{ac}_g Finv^{bac}_x[g,e] R^{ab}_e F^{abc}_x[e,f]
          for (int f = 0; f < r; ++f) {
            if (!(adm(b, c, f) && adm(a, f, x))) continue;
            for (int h = 0; h < r; ++h) {
              if (!(adm(b, c, h) && adm(h, a, x))) continue;
              Poly eq = h == f ? R(a, f, x) : Poly(nv);
              for (int e = 0; e < r; ++e)
                for (int g = 0; g < r; ++g) {
                  Scalar k = Fv(b, c, a, x, h, g) * Finv(b, a, c, x, g, e) * Fv(a, b, c, x, e, f);
                  if (k.is_zero()) continue;
                  eq -= k * (R(a, c, g) * R(a, b, e));
                }
              if (!eq.is_zero()) eqs.push_back(std::move(eq));
            }
          }
          // sum_e F^{cab}_x[g,e] R^{ec}_x F^{abc}_x[e,f] = R^{ac}_g F^{acb}_x[g,f] R^{bc}_f
          for (int f = 0; f < r; ++f) {
            if (!(adm(b, c, f) && adm(a, f, x))) continue;
            for (int g = 0; g < r; ++g) {
              if (!(adm(c, a, g) && adm(g, b, x))) continue;
              Poly eq(nv);
              for (int e = 0; e < r; ++e) {
                Scalar k = Fv(c, a, b, x, g, e) * Fv(a, b, c, x, e, f);
                if (!k.is_zero()) eq += k * R(e, c, x);
              }
              Scalar k = Fv(a, c, b, x, g, f);
              if (!k.is_zero()) eq -= k * (R(a, c, g) * R(b, c, f));
              if (!eq.is_zero()) eqs.push_back(std::move(eq));
            }
          }
        }

  SystemSolver solver(nv, opt.conductor, std::vector<bool>(nv, true));
  solver.run(eqs, std::vector<std::optional<Poly>>(nv));
  solver.sort_solutions();
  if (solver.underdetermined) result.notes.push_back("positive-dimensional branches skipped: " +
                                                     std::to_string(solver.underdetermined));
  if (solver.stuck) result.notes.push_back("branches without progress: " + std::to_string(solver.stuck));

  for (const auto& values : solver.solutions) {
    CategoryData cat = base;
    cat.name = base.name + "-hexagon-solution-" + std::to_string(result.solutions.size());
    for (int v = 0; v < nv; ++v) cat.R[keys[v]] = Matrix::scalar(values[v]);
    cat.theta.clear();
    try {
      cat.theta = ribbon_twists(cat, 4 * std::max(1L, opt.conductor));
    } catch (const MathError&) {
      cat.theta.assign(r, Scalar(1));
      result.notes.push_back(cat.name + ": no ribbon twist among the searched roots of unity");
    }
    if (!verify_hexagons(cat).ok()) {
      result.notes.push_back("discarded a candidate failing the hexagon re-check");
      continue;
    }
    result.solutions.push_back(std::move(cat));
  }
  return result;
}

}  // namespace wqh
