#include "wqh/hopf.hpp"

#include <stdexcept>

namespace wqh {

namespace {

long block_product(const std::vector<long>& D, const std::vector<int>& t, std::size_t from, std::size_t to) {
  long p = 1;
  for (std::size_t i = from; i < to; ++i) p *= D[t[i]];
  return p;
}

}  // namespace

std::vector<std::vector<int>> label_tuples(int rank, int length) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < length; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int a = 0; a < rank; ++a) {
        next.push_back(t);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

Family unit_family(const std::vector<long>& D, int degree) {
  Family f;
  f.degree = degree;
  for (auto& t : label_tuples(static_cast<int>(D.size()), degree))
    f.blocks[t] = Matrix::identity(block_product(D, t, 0, t.size()));
  return f;
}

Family zero_family(const std::vector<long>& D, int degree) {
  Family f;
  f.degree = degree;
  for (auto& t : label_tuples(static_cast<int>(D.size()), degree)) {
    long n = block_product(D, t, 0, t.size());
    f.blocks[t] = Matrix(n, n);
  }
  return f;
}

Family operator*(const Family& x, const Family& y) {
  if (x.degree != y.degree) throw std::invalid_argument("Family *: degree mismatch");
  Family f;
  f.degree = x.degree;
  for (const auto& [t, m] : x.blocks) f.blocks[t] = m * y.at(t);
  return f;
}

Family operator+(const Family& x, const Family& y) {
  if (x.degree != y.degree) throw std::invalid_argument("Family +: degree mismatch");
  Family f = x;
  for (auto& [t, m] : f.blocks) m += y.at(t);
  return f;
}

Family operator*(const Scalar& s, const Family& x) {
  Family f = x;
  for (auto& [t, m] : f.blocks) m *= s;
  return f;
}

Family tensor(const Family& x, const Family& y) {
  Family f;
  f.degree = x.degree + y.degree;
  for (const auto& [tx, mx] : x.blocks)
    for (const auto& [ty, my] : y.blocks) {
      auto t = tx;
      t.insert(t.end(), ty.begin(), ty.end());
      f.blocks[t] = kron(mx, my);
    }
  return f;
}

double family_deviation(const Family& x, const Family& y) {
  double worst = 0.0;
  for (const auto& [t, m] : x.blocks) worst = std::max(worst, max_deviation(m, y.at(t)));
  return worst;
}

bool families_close(const Family& x, const Family& y, const Tolerance& tol) {
  if (x.degree != y.degree) return false;
  for (const auto& [t, m] : x.blocks)
    if (!matrices_close(m, y.at(t), tol)) return false;
  return true;
}

bool operator==(const Family& x, const Family& y) { return families_close(x, y, Tolerance{}); }

long WQHopf::dimension() const {
  long s = 0;
  for (long d : D) s += d * d;
  return s;
}

Family coproduct_at(const WQHopf& H, const Family& x, int pos) {
  const auto& F = *H.functor;
  const auto& ring = F.cat->ring;
  const auto& D = H.D;
  const int r = H.rank();
  Family out;
  out.degree = x.degree + 1;
  for (const auto& t : label_tuples(r, out.degree)) {
    const int a = t[pos], b = t[pos + 1];
    const long L = block_product(D, t, 0, pos), Rr = block_product(D, t, pos + 2, t.size());
    const Matrix& c = F.c.at({a, b});
    const Matrix& ci = F.c_inv.at({a, b});
    const long M = static_cast<long>(c.rows());
    Matrix mid(L * M * Rr, L * M * Rr);
    long off = 0;
    for (int z = 0; z < r; ++z) {
      const long n = ring.N(a, b, z), dz = D[z];
      if (n == 0) continue;
      std::vector<int> tz = t;
      tz.erase(tz.begin() + pos + 1);
      tz[pos] = z;
      const Matrix& xz = x.at(tz);
      for (long mu = 0; mu < n; ++mu) {
        const long base = off + mu * dz;
        for (long l = 0; l < L; ++l)
          for (long k = 0; k < dz; ++k)
            for (long q = 0; q < Rr; ++q)
              for (long l2 = 0; l2 < L; ++l2)
                for (long k2 = 0; k2 < dz; ++k2)
                  for (long q2 = 0; q2 < Rr; ++q2) {
                    const Scalar& v = xz((l * dz + k) * Rr + q, (l2 * dz + k2) * Rr + q2);
                    if (v.is_zero()) continue;
                    mid((l * M + base + k) * Rr + q, (l2 * M + base + k2) * Rr + q2) = v;
                  }
      }
      off += n * dz;
    }
    Matrix IL = Matrix::identity(L), IR = Matrix::identity(Rr);
    out.blocks[t] = kron(IL, kron(ci, IR)) * mid * kron(IL, kron(c, IR));
  }
  return out;
}

PairFamily coproduct(const WQHopf& H, const HElement& h) { return coproduct_at(H, h, 0); }

Family counit_at(const Family& x, int pos) {
  Family out;
  out.degree = x.degree - 1;
  for (const auto& [t, m] : x.blocks) {
    if (t[pos] != 0) continue;
    auto s = t;
    s.erase(s.begin() + pos);
    out.blocks[s] = m;
  }
  return out;
}

Scalar counit(const HElement& h) { return h.at({0})(0, 0); }

HElement antipode(const WQHopf& H, const HElement& h) {
  const auto& ring = H.cat().ring;
  HElement s;
  s.degree = 1;
  for (int a = 0; a < H.rank(); ++a) s.blocks[{a}] = H.dT[a] * h.at({ring.dual(a)}).transpose() * H.dT_inv[a];
  return s;
}

PairFamily flip21(const WQHopf& H, const PairFamily& x) {
  PairFamily out;
  out.degree = 2;
  for (const auto& [t, m] : x.blocks) {
    const long da = H.D[t[0]], db = H.D[t[1]];
    out.blocks[{t[1], t[0]}] = flip(da, db) * m * flip(db, da);
  }
  return out;
}

Family unit_left(const WQHopf& H, const Family& x) { return tensor(unit_family(H.D, 1), x); }
Family unit_right(const WQHopf& H, const Family& x) { return tensor(x, unit_family(H.D, 1)); }

std::vector<std::pair<std::vector<long>, HElement>> matrix_unit_basis(const WQHopf& H) {
  std::vector<std::pair<std::vector<long>, HElement>> out;
  for (int a = 0; a < H.rank(); ++a)
    for (long i = 0; i < H.D[a]; ++i)
      for (long j = 0; j < H.D[a]; ++j) {
        HElement e = zero_family(H.D, 1);
        e.at({a})(i, j) = 1;
        out.push_back({{a, i, j}, std::move(e)});
      }
  return out;
}

std::vector<Irrep> irreducible_representations(const WQHopf& H) {
  std::vector<Irrep> out;
  for (int a = 0; a < H.rank(); ++a) out.push_back({a, H.D[a]});
  return out;
}

WQHopf reconstruct(std::shared_ptr<const FunctorData> Fp) {
  const auto& F = *Fp;
  const auto& cat = *F.cat;
  const int r = cat.rank();
  WQHopf H;
  H.functor = Fp;
  H.D = F.D.values;
  const auto& D = H.D;
  auto leaf = [](int a) { return Word::leaf(a); };

  H.delta_unit = coproduct(H, unit_family(D, 1));

  H.phi.degree = H.phi_inv.degree = 3;
  for (const auto& t : label_tuples(r, 3)) {
    const int a = t[0], b = t[1], c = t[2];
    Word A = leaf(a), B = leaf(b), C = leaf(c);
    Tensorator right = tensorator(F, A, Word::join(B, C));
    Tensorator left = tensorator(F, Word::join(A, B), C);
    Morphism assoc = associator(cat, A, B, C);
    Matrix fa = functor_on_morphism(F, assoc), fa_inv = functor_on_morphism(F, invert(assoc));
    Matrix Ia = Matrix::identity(D[a]), Ic = Matrix::identity(D[c]);
    H.phi.blocks[t] = kron(F.c_inv.at({a, b}), Ic) * left.c_inv * fa * right.c * kron(Ia, F.c.at({b, c}));
    H.phi_inv.blocks[t] = kron(Ia, F.c_inv.at({b, c})) * right.c_inv * fa_inv * left.c * kron(F.c.at({a, b}), Ic);
  }

  H.R.degree = H.R_inv.degree = 2;
  for (const auto& t : label_tuples(r, 2)) {
    const int a = t[0], b = t[1];
    Morphism psi = braiding(cat, leaf(a), leaf(b));
    H.R.blocks[t] = flip(D[b], D[a]) * F.c_inv.at({b, a}) * functor_on_morphism(F, psi) * F.c.at({a, b});
    H.R_inv.blocks[t] = F.c_inv.at({a, b}) * functor_on_morphism(F, invert(psi)) * F.c.at({b, a}) * flip(D[a], D[b]);
  }

  H.alpha.degree = H.beta.degree = H.ribbon_v.degree = 1;
  for (int a = 0; a < r; ++a) {
    const int da = cat.ring.dual(a);
    const long n = D[a];
    EvCoev e = ev_coev(cat, a);
    const Matrix& d = F.d[a];
    auto dinv = inverse(d);
    if (!dinv) throw MathError("duality isomorphism is singular at label " + cat.ring.label(a));
    // ev^Rep = F(ev) c (d (x) id) as a row on F(a)^* (x) F(a); alpha is its reshape
    Matrix ev_rep = functor_on_morphism(F, e.ev) * F.c.at({da, a}) * kron(d, Matrix::identity(n));
    Matrix alpha(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) alpha(i, j) = ev_rep(0, i * n + j);
    H.alpha.blocks[{a}] = alpha;
    // coev^Rep = (id (x) d^-1) c^-1 F(coev) as a column on F(a) (x) F(a)^*; beta is its reshape
    Matrix coev_rep = kron(Matrix::identity(n), *dinv) * F.c_inv.at({a, da}) * functor_on_morphism(F, e.coev);
    Matrix beta(n, n);
    for (long i = 0; i < n; ++i)
      for (long k = 0; k < n; ++k) beta(i, k) = coev_rep(i * n + k, 0);
    H.beta.blocks[{a}] = beta;
    H.ribbon_v.blocks[{a}] = functor_on_morphism(F, twist_morphism(cat, leaf(a)));
  }
  // S(h)_a = d_a^T h_{dual a}^T d_a^{-T}
  for (int a = 0; a < r; ++a) {
    H.dT.push_back(F.d[a].transpose());
    H.dT_inv.push_back(*inverse(H.dT.back()));
  }
  return H;
}

std::vector<bool> alpha_invertible(const WQHopf& H) {
  std::vector<bool> out;
  for (int a = 0; a < H.rank(); ++a) out.push_back(inverse(H.alpha.at({a})).has_value());
  return out;
}

std::vector<bool> beta_invertible(const WQHopf& H) {
  std::vector<bool> out;
  for (int a = 0; a < H.rank(); ++a) out.push_back(inverse(H.beta.at({a})).has_value());
  return out;
}

namespace {

// sum_i S(x_i) A y_i restricted to block a, from M = Delta(h)_{dual a, a} = sum x (x) y.
Matrix antipode_left_sum(const WQHopf& H, const Matrix& M, int a, const Matrix& alpha) {
  const long n = H.D[a];
  Matrix A = H.dT_inv[a] * alpha;  // D(dual a) x D(a)
  const long m = static_cast<long>(A.rows());
  Matrix s(m, n);
  for (long p = 0; p < m; ++p)
    for (long q = 0; q < n; ++q) {
      Scalar acc;
      for (long r = 0; r < m; ++r)
        for (long t = 0; t < n; ++t)
          if (!A(r, t).is_zero()) acc += A(r, t) * M(r * n + t, p * n + q);
      s(p, q) = acc;
    }
  return H.dT[a] * s;
}

// sum_i x_i B S(y_i) restricted to block a, from M = Delta(h)_{a, dual a}.
Matrix antipode_right_sum(const WQHopf& H, const Matrix& M, int a, const Matrix& beta) {
  const long n = H.D[a];
  Matrix B = beta * H.dT[a];  // D(a) x D(dual a)
  const long m = static_cast<long>(B.cols());
  Matrix s(n, m);
  for (long p = 0; p < n; ++p)
    for (long q = 0; q < m; ++q) {
      Scalar acc;
      for (long r = 0; r < n; ++r)
        for (long t = 0; t < m; ++t)
          if (!B(r, t).is_zero()) acc += B(r, t) * M(p * m + q, r * m + t);
      s(p, q) = acc;
    }
  return s * H.dT_inv[a];
}

}  // namespace

Report verify_weak_axioms(const WQHopf& H, const Tolerance& tol) {
  Report rep;
  const auto& ring = H.cat().ring;
  const int r = H.rank();
  auto cmp = [&](const std::string& id, const std::vector<long>& where, const Family& x, const Family& y) {
    for (const auto& [t, m] : x.blocks) {
      auto w = where;
      w.insert(w.end(), t.begin(), t.end());
      const Matrix& other = y.at(t);
      rep.observe(id, w, matrices_close(m, other, tol), max_deviation(m, other));
    }
  };
  for (const char* id :
       {"delta_unit_idempotent", "delta_multiplicative", "counit_left", "counit_right", "ff1", "ff2", "ff3", "ff4",
        "ff5", "quasi_coassociativity", "phi_pentagon", "antipode_alpha", "antipode_beta", "R_intertwining",
        "ribbon_central", "ribbon_counit", "ribbon_antipode", "ribbon_coproduct"})
    rep.entry(id);

  const PairFamily& du = H.delta_unit;
  cmp("delta_unit_idempotent", {}, du * du, du);

  auto basis = matrix_unit_basis(H);
  std::vector<PairFamily> deltas;
  for (const auto& [idx, e] : basis) deltas.push_back(coproduct(H, e));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& bi = basis[i].first;
      const auto& bj = basis[j].first;
      if (bi[0] != bj[0]) continue;  // different blocks multiply to zero on both sides
      Family prod = basis[i].second * basis[j].second;
      std::vector<long> where = bi;
      where.insert(where.end(), bj.begin(), bj.end());
      cmp("delta_multiplicative", where, coproduct(H, prod), deltas[i] * deltas[j]);
    }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    cmp("counit_left", basis[i].first, counit_at(deltas[i], 0), basis[i].second);
    cmp("counit_right", basis[i].first, counit_at(deltas[i], 1), basis[i].second);
  }

  cmp("ff1", {}, H.phi_inv * H.phi, coproduct_at(H, du, 1));
  cmp("ff2", {}, H.phi * H.phi_inv, coproduct_at(H, du, 0));
  cmp("ff3", {}, H.R * H.R_inv, flip21(H, du));
  cmp("ff4", {}, H.R_inv * H.R, du);
  for (int pos = 0; pos < 3; ++pos) cmp("ff5", {pos}, counit_at(H.phi, pos), du);

  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& where = basis[i].first;
    const PairFamily& d = deltas[i];
    cmp("quasi_coassociativity", where, H.phi * coproduct_at(H, d, 1), coproduct_at(H, d, 0) * H.phi);
    cmp("R_intertwining", where, H.R * d * H.R_inv, flip21(H, d));
    const Scalar eps = counit(basis[i].second);
    for (int a = 0; a < r; ++a) {
      const int da = ring.dual(a);
      std::vector<long> w = where;
      w.push_back(a);
      Matrix lhs = antipode_left_sum(H, d.at({da, a}), a, H.alpha.at({a}));
      Matrix rhs = H.alpha.at({a}) * eps;
      rep.observe("antipode_alpha", w, matrices_close(lhs, rhs, tol), max_deviation(lhs, rhs));
      lhs = antipode_right_sum(H, d.at({a, da}), a, H.beta.at({a}));
      rhs = H.beta.at({a}) * eps;
      rep.observe("antipode_beta", w, matrices_close(lhs, rhs, tol), max_deviation(lhs, rhs));
    }
    cmp("ribbon_central", where, H.ribbon_v * basis[i].second, basis[i].second * H.ribbon_v);
  }

  // (Delta x id x id)(phi) (id x id x Delta)(phi) = (phi x 1)(id x Delta x id)(phi)(1 x phi)
  Family lhs = coproduct_at(H, H.phi, 0) * coproduct_at(H, H.phi, 2);
  Family rhs = unit_right(H, H.phi) * coproduct_at(H, H.phi, 1) * unit_left(H, H.phi);
  cmp("phi_pentagon", {}, lhs, rhs);

  Scalar ev = counit(H.ribbon_v);
  rep.observe("ribbon_counit", {}, tol.close(ev, Scalar(1)), deviation(ev, Scalar(1)));
  cmp("ribbon_antipode", {}, antipode(H, H.ribbon_v), H.ribbon_v);
  cmp("ribbon_coproduct", {}, coproduct(H, H.ribbon_v),
      H.R_inv * flip21(H, H.R_inv) * tensor(H.ribbon_v, H.ribbon_v));

  std::string alpha_note = "alpha invertible per block:", beta_note = "beta invertible per block:";
  auto ai = alpha_invertible(H), bi = beta_invertible(H);
  for (int a = 0; a < r; ++a) {
    alpha_note += " " + ring.label(a) + (ai[a] ? "=yes" : "=no");
    beta_note += " " + ring.label(a) + (bi[a] ? "=yes" : "=no");
  }
  rep.note("antipode_alpha", alpha_note);
  rep.note("antipode_beta", beta_note);
  return rep;
}

namespace {

// Row-major vectorization of each matrix as one row of the result.
Matrix stack_rows(const std::vector<Matrix>& ms) {
  if (ms.empty()) return Matrix();
  const std::size_t len = ms[0].rows() * ms[0].cols();
  Matrix out(ms.size(), len);
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (std::size_t i = 0; i < ms[k].rows(); ++i)
      for (std::size_t j = 0; j < ms[k].cols(); ++j) out(k, i * ms[k].cols() + j) = ms[k](i, j);
  return out;
}

// dim { X : X A_h = B_h X for all h } for X of shape rows x cols.
std::size_t intertwiner_dimension(const std::vector<std::pair<Matrix, Matrix>>& actions, std::size_t rows,
                                  std::size_t cols) {
  // vec(X) row-major: (B X - X A)_{ij} = sum_k B_ik X_kj - sum_k X_ik A_kj
  Matrix sys(actions.size() * rows * cols, rows * cols);
  std::size_t row = 0;
  for (const auto& [A, B] : actions)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j, ++row) {
        for (std::size_t k = 0; k < rows; ++k)
          if (!B(i, k).is_zero()) sys(row, k * cols + j) += B(i, k);
        for (std::size_t k = 0; k < cols; ++k)
          if (!A(k, j).is_zero()) sys(row, i * cols + k) -= A(k, j);
      }
  return rows * cols - rank(sys);
}

}  // namespace

Report verify_structure_transport(const WQHopf& H, const Tolerance& tol) {
  Report rep;
  const auto& F = *H.functor;
  const auto& cat = H.cat();
  const auto& ring = cat.ring;
  const auto& D = H.D;
  const int r = H.rank();
  for (const char* id : {"intertwiner_basis", "braiding_transport", "rep_ev_intertwines", "rep_coev_intertwines",
                         "rep_snake", "alpha_pairing"})
    rep.entry(id);
  auto basis = matrix_unit_basis(H);
  std::vector<PairFamily> deltas;
  for (const auto& [idx, e] : basis) deltas.push_back(coproduct(H, e));

  // q^{ab}_{z,mu} = F(p_mu) c_{a,b} : F(a) (x) F(b) -> F(z)
  auto projections = [&](int a, int b, int z) {
    std::vector<Matrix> qs;
    Word ab = Word::join(Word::leaf(a), Word::leaf(b));
    for (const auto& p : morphism_basis(cat, ab, Word::leaf(z)))
      qs.push_back(functor_on_morphism(F, p) * F.c.at({a, b}));
    return qs;
  };
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int z = 0; z < r; ++z) {
        const long n = ring.N(a, b, z);
        auto qs = projections(a, b, z);
        std::vector<std::pair<Matrix, Matrix>> actions;
        for (std::size_t i = 0; i < basis.size(); ++i)
          actions.push_back({deltas[i].at({a, b}), basis[i].second.at({z})});
        bool ok = static_cast<long>(qs.size()) == n;
        for (const auto& q : qs)
          for (const auto& [A, B] : actions) ok = ok && matrices_close(q * A, B * q, tol);
        if (n > 0) ok = ok && static_cast<long>(rank(stack_rows(qs))) == n;
        ok = ok && static_cast<long>(intertwiner_dimension(actions, D[z], D[a] * D[b])) == n;
        rep.observe("intertwiner_basis", {a, b, z}, ok);
        if (n == 0) continue;
        // q^{ba}_nu (flip R_{ab}) = sum_mu R(nu, mu) q^{ab}_mu
        auto qba = projections(b, a, z);
        Matrix braid = flip(D[a], D[b]) * H.R.at({a, b});
        Matrix basis_rows = stack_rows(qs).transpose();
        Matrix expect = cat.rmatrix(a, b, z);
        for (long nu = 0; nu < n; ++nu) {
          Matrix target = stack_rows({qba[nu] * braid}).transpose();
          auto coeff = solve(basis_rows, target);
          if (!coeff) {
            rep.fail("braiding_transport", {a, b, z, nu}, "transported braiding leaves the intertwiner span");
            continue;
          }
          double worst = 0.0;
          bool good = true;
          for (long mu = 0; mu < n; ++mu) {
            good = good && tol.close((*coeff)(mu, 0), expect(nu, mu));
            worst = std::max(worst, deviation((*coeff)(mu, 0), expect(nu, mu)));
          }
          rep.observe("braiding_transport", {a, b, z, nu}, good, worst);
        }
      }

  for (int a = 0; a < r; ++a) {
    const int da = ring.dual(a);
    const long n = D[a];
    const Matrix& d = F.d[a];
    const Matrix dinv = *inverse(d);
    EvCoev e = ev_coev(cat, a);
    Matrix In = Matrix::identity(n);
    Matrix ev_rep = functor_on_morphism(F, e.ev) * F.c.at({da, a}) * kron(d, In);
    Matrix coev_rep = kron(In, dinv) * F.c_inv.at({a, da}) * functor_on_morphism(F, e.coev);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Scalar eps = counit(basis[i].second);
      std::vector<long> w = basis[i].first;
      w.push_back(a);
      // the dual representation acts by d^-1 h_{dual a} d
      Matrix on_pair = kron(dinv, In) * deltas[i].at({da, a}) * kron(d, In);
      Matrix lhs = ev_rep * on_pair, rhs = ev_rep * eps;
      rep.observe("rep_ev_intertwines", w, matrices_close(lhs, rhs, tol), max_deviation(lhs, rhs));
      on_pair = kron(In, dinv) * deltas[i].at({a, da}) * kron(In, d);
      lhs = on_pair * coev_rep;
      rhs = coev_rep * eps;
      rep.observe("rep_coev_intertwines", w, matrices_close(lhs, rhs, tol), max_deviation(lhs, rhs));
    }
    // (id (x) ev) phi^-1 (coev (x) id) = id with the dual acting in the middle slot
    Matrix phi_inv = kron(In, kron(dinv, In)) * H.phi_inv.at({a, da, a}) * kron(In, kron(d, In));
    Matrix snake = kron(In, ev_rep) * phi_inv * kron(coev_rep, In);
    rep.observe("rep_snake", {a}, matrices_close(snake, In, tol), max_deviation(snake, In));
    // ev^Rep = ev^Vec (id (x) alpha)
    Matrix ev_vec(1, n * n);
    for (long k = 0; k < n; ++k) ev_vec(0, k * n + k) = 1;
    Matrix rhs = ev_vec * kron(In, H.alpha.at({a}));
    rep.observe("alpha_pairing", {a}, matrices_close(ev_rep, rhs, tol), max_deviation(ev_rep, rhs));
  }
  return rep;
}

}  // namespace wqh
