#pragma once

#include "wqh/hopf.hpp"

namespace wqh {

/// Drinfeld twist between two reconstructions from the same category and D.
struct TwistElement {
  PairFamily T;
  PairFamily T_inv;  // quasi-inverse: T T_inv = T_inv T = Delta(1)
  /// phi_{a,b} on F(a b) with c2 = phi c1.
  std::map<std::pair<int, int>, Matrix> comparison;
};

/// Throws InputError on mismatched block structure, MathError when c2 does not factor through c1.
TwistElement twist_between(const WQHopf& H1, const WQHopf& H2, const Tolerance& tol = {});

/// Quasi-inverse relations and the transport of Delta, R and phi from H1 to H2.
Report verify_twist(const WQHopf& H1, const WQHopf& H2, const TwistElement& T, const Tolerance& tol = {});

/// Element of H^{(x) n} together with a quasi-inverse.
struct Cochain {
  Family gamma;
  Family gamma_inv;
  int degree() const { return gamma.degree; }
};

/// Cochain with the blockwise inverse; throws MathError if some block is singular.
Cochain make_cochain(const Family& gamma);

/// delta(gamma) = prod_{i odd} Delta_i(gamma) prod_{i even} Delta_i(gamma)^{-1}, with
/// Delta_0 = 1 (x) gamma, Delta_{n+1} = gamma (x) 1 and factors in increasing i.
Cochain coboundary(const WQHopf& H, const Cochain& gamma);

}  // namespace wqh
