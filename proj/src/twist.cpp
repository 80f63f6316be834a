#include "wqh/twist.hpp"

namespace wqh {

TwistElement twist_between(const WQHopf& H1, const WQHopf& H2, const Tolerance& tol) {
  if (H1.D != H2.D) throw InputError("twist_between: dimension functions differ");
  if (!(H1.cat().ring == H2.cat().ring)) throw InputError("twist_between: fusion rings differ");
  const auto& F1 = *H1.functor;
  const auto& F2 = *H2.functor;
  TwistElement tw;
  tw.T.degree = tw.T_inv.degree = 2;
  for (const auto& t : label_tuples(H1.rank(), 2)) {
    const std::pair<int, int> key{t[0], t[1]};
    const Matrix& c1 = F1.c.at(key);
    const Matrix& c1i = F1.c_inv.at(key);
    const Matrix& c2 = F2.c.at(key);
    // c2 = phi c1 determines phi on the image of c1, which is all of F(a b)
    Matrix phi = c2 * c1i;
    if (!matrices_close(phi * c1, c2, tol))
      throw MathError("twist_between: tensorators have different kernels at (" + std::to_string(t[0]) + "," +
                      std::to_string(t[1]) + ")");
    auto phi_inv = inverse(phi);
    if (!phi_inv) throw MathError("twist_between: comparison map is singular");
    tw.T.blocks[t] = c1i * *phi_inv * c1;
    tw.T_inv.blocks[t] = c1i * phi * c1;
    tw.comparison[key] = std::move(phi);
  }
  return tw;
}

Report verify_twist(const WQHopf& H1, const WQHopf& H2, const TwistElement& tw, const Tolerance& tol) {
  Report rep;
  auto cmp = [&](const std::string& id, const std::vector<long>& where, const Family& x, const Family& y) {
    for (const auto& [t, m] : x.blocks) {
      auto w = where;
      w.insert(w.end(), t.begin(), t.end());
      const Matrix& other = y.at(t);
      rep.observe(id, w, matrices_close(m, other, tol), max_deviation(m, other));
    }
  };
  for (const char* id : {"twist_quasi_inverse", "coproduct_transport", "R_transport", "phi_transport"})
    rep.entry(id);
  const PairFamily& T = tw.T;
  const PairFamily& Ti = tw.T_inv;
  cmp("twist_quasi_inverse", {0}, T * Ti, H1.delta_unit);
  cmp("twist_quasi_inverse", {1}, Ti * T, H1.delta_unit);
  for (const auto& [idx, h] : matrix_unit_basis(H1))
    cmp("coproduct_transport", idx, coproduct(H2, h), T * coproduct(H1, h) * Ti);
  cmp("R_transport", {}, H2.R, flip21(H1, T) * H1.R * Ti);
  // phi2 = T_12 (Delta x id)(T) phi1 (id x Delta)(T^-1) T^-1_23
  Family rhs = unit_right(H1, T) * coproduct_at(H1, T, 0) * H1.phi * coproduct_at(H1, Ti, 1) * unit_left(H1, Ti);
  cmp("phi_transport", {}, H2.phi, rhs);
  return rep;
}

Cochain make_cochain(const Family& gamma) {
  Cochain c{gamma, gamma};
  for (auto& [t, m] : c.gamma_inv.blocks) {
    auto inv = inverse(m);
    if (!inv) throw MathError("cochain is not invertible on a block");
    m = *inv;
  }
  return c;
}

Cochain coboundary(const WQHopf& H, const Cochain& g) {
  const int n = g.degree();
  if (n < 1) throw std::invalid_argument("coboundary: degree must be at least 1");
  auto face = [&](const Family& x, int i) {
    if (i == 0) return unit_left(H, x);
    if (i == n + 1) return unit_right(H, x);
    return coproduct_at(H, x, i - 1);
  };
  Cochain out;
  out.gamma = unit_family(H.D, n + 1);
  out.gamma_inv = unit_family(H.D, n + 1);
  // the quasi-inverse multiplies the inverted factors in reverse order
  std::vector<Family> factors, inv_factors;
  for (int i = 1; i <= n + 1; i += 2) {
    factors.push_back(face(g.gamma, i));
    inv_factors.push_back(face(g.gamma_inv, i));
  }
  for (int i = 0; i <= n + 1; i += 2) {
    factors.push_back(face(g.gamma_inv, i));
    inv_factors.push_back(face(g.gamma, i));
  }
  for (const auto& f : factors) out.gamma = out.gamma * f;
  for (auto it = inv_factors.rbegin(); it != inv_factors.rend(); ++it) out.gamma_inv = out.gamma_inv * *it;
  return out;
}

}  // namespace wqh
