#pragma once

#include <string>
#include <vector>

#include "wqh/report.hpp"

namespace wqh {

/// Simple labels (index 0 is the unit), the duality involution and N_{ab}^c.
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<std::string> labels, std::vector<int> dual);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_.at(a); }
  /// Index of a label name; throws InputError if unknown.
  int index_of(const std::string& name) const;
  int dual(int a) const { return dual_.at(a); }
  const std::vector<int>& duals() const { return dual_; }

  int N(int a, int b, int c) const { return n_[(a * rank() + b) * rank() + c]; }
  void set_N(int a, int b, int c, int m) { n_[(a * rank() + b) * rank() + c] = m; }
  /// Channels c with N_{ab}^c > 0, in label order.
  std::vector<int> channels(int a, int b) const;
  bool multiplicity_free() const;

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> dual_;
  std::vector<int> n_;
};

FusionRing zn_ring(int n);
FusionRing fibonacci_ring();
FusionRing ising_ring();

/// Lists every violated unit, associativity and duality constraint.
Report verify_fusion_ring(const FusionRing& ring);

struct DimensionFunction {
  std::vector<long> values;
  bool exact = false;
  long objective() const;
  friend bool operator==(const DimensionFunction&, const DimensionFunction&) = default;
};

/// Checks D(1)=1, D(a)=D(dual a) and D(a)D(b) >= sum_c N_{ab}^c D(c).
/// Sets *exact when every inequality is an equality.
Report is_weak_dimension_function(const FusionRing& ring, const std::vector<long>& values,
                                  bool* exact = nullptr);

/// D(X) = sum_{i,j} N_{X,i}^j with D(1) = 1. Throws MathError if the result is not weak.
DimensionFunction canonical_weak_dimension(const FusionRing& ring);
/// D(X) = max_{I,J != 1} sum_K N_{IJ}^K with D(1) = 1. Throws MathError if the result is not weak.
DimensionFunction max_weak_dimension(const FusionRing& ring);
/// Exhaustive search over 1 <= D <= bound minimizing sum D^2, ties broken lexicographically.
/// Throws MathError when nothing in range is feasible.
DimensionFunction minimize_dimension_function(const FusionRing& ring, long bound);

}  // namespace wqh
