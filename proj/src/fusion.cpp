#include "wqh/fusion.hpp"

#include <algorithm>
#include <limits>

namespace wqh {

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<int> dual)
    : labels_(std::move(labels)), dual_(std::move(dual)) {
  if (labels_.empty()) throw InputError("fusion ring needs at least the unit label");
  if (dual_.size() != labels_.size()) throw InputError("dual permutation has wrong length");
  for (int d : dual_)
    if (d < 0 || d >= rank()) throw InputError("dual permutation entry out of range");
  n_.assign(labels_.size() * labels_.size() * labels_.size(), 0);
}

int FusionRing::index_of(const std::string& name) const {
  for (int a = 0; a < rank(); ++a)
    if (labels_[a] == name) return a;
  throw InputError("unknown label '" + name + "'");
}

std::vector<int> FusionRing::channels(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < rank(); ++c)
    if (N(a, b, c) > 0) out.push_back(c);
  return out;
}

bool FusionRing::multiplicity_free() const {
  return std::all_of(n_.begin(), n_.end(), [](int m) { return m <= 1; });
}

FusionRing zn_ring(int n) {
  if (n < 1) throw InputError("Z/n ring needs n >= 1");
  std::vector<std::string> labels;
  std::vector<int> dual;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : "g" + std::to_string(a));
    dual.push_back((n - a) % n);
  }
  FusionRing r(labels, dual);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.set_N(a, b, (a + b) % n, 1);
  return r;
}

FusionRing fibonacci_ring() {
  FusionRing r({"1", "tau"}, {0, 1});
  r.set_N(0, 0, 0, 1);
  r.set_N(0, 1, 1, 1);
  r.set_N(1, 0, 1, 1);
  r.set_N(1, 1, 0, 1);
  r.set_N(1, 1, 1, 1);
  return r;
}

FusionRing ising_ring() {
  FusionRing r({"1", "sigma", "psi"}, {0, 1, 2});
  for (int a = 0; a < 3; ++a) {
    r.set_N(0, a, a, 1);
    r.set_N(a, 0, a, 1);
  }
  r.set_N(1, 1, 0, 1);
  r.set_N(1, 1, 2, 1);
  r.set_N(1, 2, 1, 1);
  r.set_N(2, 1, 1, 1);
  r.set_N(2, 2, 0, 1);
  return r;
}

Report verify_fusion_ring(const FusionRing& ring) {
  Report rep;
  const int r = ring.rank();
  for (int a = 0; a < r; ++a) {
    bool ok = ring.dual(ring.dual(a)) == a;
    rep.observe("duality_involution", {a}, ok);
  }
  rep.observe("duality_unit", {0}, ring.dual(0) == 0);
  for (int a = 0; a < r; ++a)
    for (int c = 0; c < r; ++c) {
      int want = a == c ? 1 : 0;
      rep.observe("unit_left", {a, c}, ring.N(0, a, c) == want);
      rep.observe("unit_right", {a, c}, ring.N(a, 0, c) == want);
    }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      int want = b == ring.dual(a) ? 1 : 0;
      rep.observe("duality", {a, b, 0}, ring.N(a, b, 0) == want);
    }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < r; ++e) {
            lhs += static_cast<long>(ring.N(a, b, e)) * ring.N(e, c, d);
            rhs += static_cast<long>(ring.N(b, c, e)) * ring.N(a, e, d);
          }
          rep.observe("associativity", {a, b, c, d}, lhs == rhs, static_cast<double>(std::labs(lhs - rhs)));
        }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) rep.observe("nonnegative", {a, b, c}, ring.N(a, b, c) >= 0);
  return rep;
}

long DimensionFunction::objective() const {
  long s = 0;
  for (long v : values) s += v * v;
  return s;
}

Report is_weak_dimension_function(const FusionRing& ring, const std::vector<long>& values, bool* exact) {
  Report rep;
  const int r = ring.rank();
  if (static_cast<int>(values.size()) != r) {
    rep.fail("defined_on_all_labels", {static_cast<long>(values.size())});
    if (exact) *exact = false;
    return rep;
  }
  rep.observe("unit_dimension", {0}, values[0] == 1, static_cast<double>(std::labs(values[0] - 1)));
  for (int a = 0; a < r; ++a) {
    rep.observe("nonnegative", {a}, values[a] >= 0);
    long d = values[ring.dual(a)];
    rep.observe("duality_symmetry", {a}, values[a] == d, static_cast<double>(std::labs(values[a] - d)));
  }
  bool all_equal = true;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      long rhs = 0;
      for (int c = 0; c < r; ++c) rhs += ring.N(a, b, c) * values[c];
      long lhs = values[a] * values[b];
      rep.observe("weak_inequality", {a, b}, lhs >= rhs, lhs >= rhs ? 0.0 : static_cast<double>(rhs - lhs));
      if (lhs != rhs) all_equal = false;
    }
  if (exact) *exact = rep.ok() && all_equal;
  return rep;
}

namespace {

DimensionFunction certified(const FusionRing& ring, std::vector<long> values, const char* what) {
  DimensionFunction d{std::move(values), false};
  Report rep = is_weak_dimension_function(ring, d.values, &d.exact);
  if (!rep.ok()) throw MathError(std::string(what) + " is not a weak dimension function:\n" + rep.human());
  return d;
}

}  // namespace

DimensionFunction canonical_weak_dimension(const FusionRing& ring) {
  const int r = ring.rank();
  std::vector<long> v(r, 0);
  for (int x = 0; x < r; ++x)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) v[x] += ring.N(x, i, j);
  v[0] = 1;
  return certified(ring, std::move(v), "canonical dimension function");
}

DimensionFunction max_weak_dimension(const FusionRing& ring) {
  const int r = ring.rank();
  long m = 1;
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < r; ++j) {
      long s = 0;
      for (int k = 0; k < r; ++k) s += ring.N(i, j, k);
      m = std::max(m, s);
    }
  std::vector<long> v(r, m);
  v[0] = 1;
  return certified(ring, std::move(v), "max dimension function");
}

DimensionFunction minimize_dimension_function(const FusionRing& ring, long bound) {
  if (bound < 1) throw InputError("bound must be at least 1");
  const int r = ring.rank();
  // One free variable per duality orbit other than the unit.
  std::vector<int> reps;
  for (int a = 1; a < r; ++a)
    if (ring.dual(a) >= a) reps.push_back(a);
  std::vector<long> digits(reps.size(), 1);
  std::vector<long> best;
  long best_obj = std::numeric_limits<long>::max();
  std::vector<long> v(r, 1);
  while (true) {
    for (std::size_t k = 0; k < reps.size(); ++k) {
      v[reps[k]] = digits[k];
      v[ring.dual(reps[k])] = digits[k];
    }
    bool feasible = true;
    for (int a = 0; a < r && feasible; ++a)
      for (int b = 0; b < r && feasible; ++b) {
        long rhs = 0;
        for (int c = 0; c < r; ++c) rhs += ring.N(a, b, c) * v[c];
        if (v[a] * v[b] < rhs) feasible = false;
      }
    if (feasible) {
      long obj = 0;
      for (long x : v) obj += x * x;
      if (obj < best_obj || (obj == best_obj && v < best)) {
        best_obj = obj;
        best = v;
      }
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == bound) digits[k++] = 1;
    if (k == digits.size()) break;
    ++digits[k];
  }
  if (best.empty()) throw MathError("no weak dimension function with values <= " + std::to_string(bound));
  return certified(ring, std::move(best), "minimizer output");
}

}  // namespace wqh
