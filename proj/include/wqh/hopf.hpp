#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wqh/functor.hpp"

namespace wqh {

/// Element of H^{(x) n}: one matrix on F(a_1) (x) ... (x) F(a_n) per label tuple.
/// Since every block of H is a full matrix algebra this is exactly H^{(x) n}.
struct Family {
  int degree = 1;
  std::map<std::vector<int>, Matrix> blocks;

  const Matrix& at(const std::vector<int>& labels) const { return blocks.at(labels); }
  Matrix& at(const std::vector<int>& labels) { return blocks.at(labels); }
};
using HElement = Family;
using PairFamily = Family;
using TripleFamily = Family;

/// All label tuples of the given length in lexicographic order.
std::vector<std::vector<int>> label_tuples(int rank, int length);

Family unit_family(const std::vector<long>& D, int degree);
Family zero_family(const std::vector<long>& D, int degree);
Family operator*(const Family& x, const Family& y);
Family operator+(const Family& x, const Family& y);
Family operator*(const Scalar& s, const Family& x);
/// Outer product x (x) y.
Family tensor(const Family& x, const Family& y);
double family_deviation(const Family& x, const Family& y);
bool families_close(const Family& x, const Family& y, const Tolerance& tol);
bool operator==(const Family& x, const Family& y);

struct WQHopf {
  std::shared_ptr<const FunctorData> functor;
  std::vector<long> D;
  PairFamily delta_unit;
  TripleFamily phi;
  TripleFamily phi_inv;
  PairFamily R;
  PairFamily R_inv;
  HElement alpha;
  HElement beta;
  HElement ribbon_v;
  // d_a^T and its inverse, cached for the antipode
  std::vector<Matrix> dT;
  std::vector<Matrix> dT_inv;

  const CategoryData& cat() const { return *functor->cat; }
  int rank() const { return static_cast<int>(D.size()); }
  long dimension() const;
};

WQHopf reconstruct(std::shared_ptr<const FunctorData> F);

/// Delta applied at tensor slot `pos` of a family: degree n -> n + 1.
Family coproduct_at(const WQHopf& H, const Family& x, int pos);
PairFamily coproduct(const WQHopf& H, const HElement& h);
/// epsilon applied at tensor slot `pos`: degree n -> n - 1 (a degree 1 input gives a 1x1 family).
Family counit_at(const Family& x, int pos);
Scalar counit(const HElement& h);
HElement antipode(const WQHopf& H, const HElement& h);
/// x_{21}: the flip conjugate of a pair family.
PairFamily flip21(const WQHopf& H, const PairFamily& x);
/// 1 (x) x, x (x) 1 with the unit of H.
Family unit_left(const WQHopf& H, const Family& x);
Family unit_right(const WQHopf& H, const Family& x);

/// Matrix units e^{(a)}_{ij} of H, with (a, i, j) as index.
std::vector<std::pair<std::vector<long>, HElement>> matrix_unit_basis(const WQHopf& H);

/// ff1-ff5, quasi-coassociativity, phi-pentagon, antipode, R-intertwining, ribbon,
/// plus multiplicativity and counit laws of Delta.
Report verify_weak_axioms(const WQHopf& H, const Tolerance& tol = {});

struct Irrep {
  int label;
  long dimension;
};
std::vector<Irrep> irreducible_representations(const WQHopf& H);

/// Intertwiner basis, transported braiding, Rep-side rigidity and the alpha pairing.
Report verify_structure_transport(const WQHopf& H, const Tolerance& tol = {});

/// Per block: is alpha_a (resp. beta_a) invertible. Reported, not asserted.
std::vector<bool> alpha_invertible(const WQHopf& H);
std::vector<bool> beta_invertible(const WQHopf& H);

}  // namespace wqh
