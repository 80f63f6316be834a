#include "wqh/functor.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "category_layout.hpp"

namespace wqh {

long GradedSpace::total() const {
  long s = 0;
  for (std::size_t z = 0; z < mult.size(); ++z) s += mult[z] * D[z];
  return s;
}

long GradedSpace::offset(int z) const {
  long s = 0;
  for (int y = 0; y < z; ++y) s += mult[y] * D[y];
  return s;
}

namespace {

constexpr int kMaxRepairs = 16;

std::mt19937_64 make_rng(long seed, long a, long b, long purpose) {
  std::seed_seq seq{static_cast<unsigned long>(seed), static_cast<unsigned long>(a), static_cast<unsigned long>(b),
                    static_cast<unsigned long>(purpose)};
  return std::mt19937_64(seq);
}

// Seeded invertible matrix with entries in {-2..2}, rejection-sampled.
std::pair<Matrix, Matrix> random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-2, 2);
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    auto inv = inverse(m);
    if (inv) return {m, *inv};
  }
}

// [I | 0] of shape m x n.
Matrix coordinate_projection(std::size_t m, std::size_t n) {
  Matrix p(m, n);
  for (std::size_t i = 0; i < m; ++i) p(i, i) = 1;
  return p;
}

long image_dim(const FusionRing& ring, const std::vector<long>& D, int a, int b) {
  long s = 0;
  for (int z = 0; z < ring.rank(); ++z) s += ring.N(a, b, z) * D[z];
  return s;
}

// U = F(ev_a) c_{dual a, a} reshaped to D(dual a) x D(a).
Matrix pairing_matrix(const FunctorData& F, int a) {
  const auto& cat = *F.cat;
  int da = cat.ring.dual(a);
  EvCoev e = ev_coev(cat, a);
  Matrix fev = functor_on_morphism(F, e.ev);
  Matrix row = fev * F.c.at({da, a});
  long m = F.D.values[da], n = F.D.values[a];
  Matrix u(m, n);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j) u(i, j) = row(0, i * n + j);
  return u;
}

}  // namespace

GradedSpace functor_on_object(const FunctorData& F, const Word& w) {
  return GradedSpace{word_dims(F.cat->ring, w), F.D.values};
}

Matrix functor_on_morphism(const FunctorData& F, const Morphism& f) {
  std::vector<Matrix> blocks;
  for (int z = 0; z < F.cat->rank(); ++z)
    blocks.push_back(kron(f.blocks[z], Matrix::identity(F.D.values[z])));
  // direct_sum would drop the shape of empty blocks; place them by offsets instead
  GradedSpace dom = functor_on_object(F, f.dom), cod = functor_on_object(F, f.cod);
  Matrix out(cod.total(), dom.total());
  for (int z = 0; z < F.cat->rank(); ++z)
    if (!blocks[z].empty()) out.set_block(cod.offset(z), dom.offset(z), blocks[z]);
  return out;
}

Tensorator tensorator(const FunctorData& F, const Word& w1, const Word& w2) {
  const auto& ring = F.cat->ring;
  const auto& D = F.D.values;
  const int r = ring.rank();
  GradedSpace g1 = functor_on_object(F, w1), g2 = functor_on_object(F, w2);
  Word w12 = Word::join(w1, w2);
  GradedSpace g12 = functor_on_object(F, w12);
  auto layouts = pair_layouts(ring, w1, w2);
  const long n1 = g1.total(), n2 = g2.total(), n12 = g12.total();
  Tensorator out{Matrix(n12, n1 * n2), Matrix(n1 * n2, n12)};
  for (int x = 0; x < r; ++x) {
    if (g1.mult[x] == 0) continue;
    for (int y = 0; y < r; ++y) {
      if (g2.mult[y] == 0) continue;
      const Matrix& cxy = F.c.at({x, y});
      const Matrix& cixy = F.c_inv.at({x, y});
      // decode rows of c_{x,y} into (z, mu, k)
      std::vector<std::array<long, 3>> rows;
      for (int z = 0; z < r; ++z)
        for (int mu = 0; mu < ring.N(x, y, z); ++mu)
          for (long k = 0; k < D[z]; ++k) rows.push_back({z, mu, k});
      for (long t1 = 0; t1 < g1.mult[x]; ++t1)
        for (long t2 = 0; t2 < g2.mult[y]; ++t2)
          for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            auto [z, mu, k] = rows[ri];
            long tree = layouts[z].find(x, y)->index(t1, t2, static_cast<int>(mu));
            long row = g12.offset(static_cast<int>(z)) + tree * D[z] + k;
            for (long k1 = 0; k1 < D[x]; ++k1)
              for (long k2 = 0; k2 < D[y]; ++k2) {
                long i1 = g1.offset(x) + t1 * D[x] + k1;
                long i2 = g2.offset(y) + t2 * D[y] + k2;
                long col = i1 * n2 + i2;
                long s = k1 * D[y] + k2;
                out.c(row, col) = cxy(ri, s);
                out.c_inv(col, row) = cixy(s, ri);
              }
          }
    }
  }
  return out;
}

std::optional<Matrix> solve_duality(const FunctorData& F, int a) {
  Matrix u = pairing_matrix(F, a);
  auto inv = inverse(u.transpose());
  if (!inv) return std::nullopt;
  return *inv;
}

const Matrix& duality_iso(const FunctorData& F, int a) { return F.d.at(a); }

FunctorData build_functor(std::shared_ptr<const CategoryData> cat, const DimensionFunction& D,
                          FunctorStrategy strategy) {
  const auto& ring = cat->ring;
  const int r = ring.rank();
  Report weak = is_weak_dimension_function(ring, D.values);
  if (!weak.ok()) throw MathError("dimension function is not weak:\n" + weak.human());
  FunctorData F;
  F.cat = cat;
  F.D = D;
  F.strategy = strategy;
  // Phase one is strategy independent: the projection [I|0], with its domain
  // mixed on (dual a, a) when the pairing would otherwise be singular.
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Matrix p = coordinate_projection(image_dim(ring, D.values, a, b), D.values[a] * D.values[b]);
      F.c_inv[{a, b}] = *right_inverse(p);
      F.c[{a, b}] = std::move(p);
    }
  F.d.assign(r, Matrix());
  F.repairs.assign(r, 0);
  for (int a = 0; a < r; ++a) {
    int da = ring.dual(a);
    if (a == 0) {
      F.d[a] = *solve_duality(F, a);
      continue;
    }
    auto d = solve_duality(F, a);
    for (int attempt = 1; !d && attempt <= kMaxRepairs; ++attempt) {
      auto rng = make_rng(0, da, a, 100 + attempt);
      long n = D.values[da] * D.values[a];
      Matrix k = random_invertible(n, rng).first;
      Matrix p = coordinate_projection(image_dim(ring, D.values, da, a), n) * k;
      F.c_inv[{da, a}] = *right_inverse(p);
      F.c[{da, a}] = std::move(p);
      F.repairs[a] = attempt;
      d = solve_duality(F, a);
    }
    if (!d) throw MathError("no duality isomorphism for label " + ring.label(a) + " after 16 repairs");
    F.d[a] = *d;
  }
  if (!strategy.random) return F;
  // Phase two mixes the codomain, which keeps ker c and hence Delta(1) fixed.
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b) {
      const Matrix p = F.c.at({a, b});
      const Matrix pinv = F.c_inv.at({a, b});
      auto rng = make_rng(strategy.seed, a, b, 1);
      for (int attempt = 0;; ++attempt) {
        if (attempt > 64) throw MathError("random tensorator mix keeps the pairing singular");
        auto [g, gi] = random_invertible(p.rows(), rng);
        F.c[{a, b}] = g * p;
        F.c_inv[{a, b}] = pinv * gi;
        if (ring.dual(a) != b) break;
        auto d = solve_duality(F, b);
        if (d) {
          F.d[b] = *d;
          break;
        }
      }
    }
  return F;
}

Morphism dual_morphism(const CategoryData& cat, const Morphism& f) {
  if (!f.dom.is_leaf() || !f.cod.is_leaf()) throw std::invalid_argument("dual_morphism: simple leaves only");
  const int x = f.dom.label(), y = f.cod.label();
  const Word X = f.dom, Y = f.cod;
  const Word Xd = Word::leaf(cat.ring.dual(x)), Yd = Word::leaf(cat.ring.dual(y));
  Morphism idYd = identity_morphism(cat, Yd), idXd = identity_morphism(cat, Xd);
  Morphism step = tensor_morphisms(cat, idYd, ev_coev(cat, x).coev);
  step = compose(tensor_morphisms(cat, idYd, tensor_morphisms(cat, f, idXd)), step);
  step = compose(associator(cat, Yd, Y, Xd), step);
  return compose(tensor_morphisms(cat, ev_coev(cat, y).ev, idXd), step);
}

Report verify_duality(const FunctorData& F, const Tolerance& tol) {
  Report rep;
  const auto& cat = *F.cat;
  const int r = cat.rank();
  rep.entry("duality_pairing");
  rep.entry("duality_naturality");
  for (int a = 0; a < r; ++a) {
    Matrix lhs = F.d[a].transpose() * pairing_matrix(F, a);
    Matrix id = Matrix::identity(F.D.values[a]);
    rep.observe("duality_pairing", {a}, matrices_close(lhs, id, tol), max_deviation(lhs, id));
  }
  // d_W F(f)^T = F(f^*) d_Y for f : W -> Y
  for (int w = 0; w < r; ++w)
    for (int y = 0; y < r; ++y)
      for (const auto& f : morphism_basis(cat, Word::leaf(w), Word::leaf(y))) {
        Matrix lhs = F.d[w] * functor_on_morphism(F, f).transpose();
        Matrix rhs = functor_on_morphism(F, dual_morphism(cat, f)) * F.d[y];
        rep.observe("duality_naturality", {w, y}, matrices_close(lhs, rhs, tol), max_deviation(lhs, rhs));
      }
  return rep;
}

Report verify_functor(const FunctorData& F, const Tolerance& tol) {
  Report rep;
  const auto& cat = *F.cat;
  const auto& D = F.D.values;
  const int r = cat.rank();
  auto close = [&](const std::string& id, const std::vector<long>& where, const Matrix& a, const Matrix& b) {
    rep.observe(id, where, matrices_close(a, b, tol), max_deviation(a, b));
  };
  for (const char* id : {"faithful", "tensorator_split", "unit_tensorator", "functoriality", "naturality"})
    rep.entry(id);
  for (int z = 0; z < r; ++z) rep.observe("faithful", {z}, D[z] > 0);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const Matrix& c = F.c.at({a, b});
      const Matrix& ci = F.c_inv.at({a, b});
      close("tensorator_split", {a, b}, c * ci, Matrix::identity(c.rows()));
      if (a == 0 || b == 0) close("unit_tensorator", {a, b}, c, Matrix::identity(c.cols()));
    }
  std::vector<Word> pairs;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) pairs.push_back(Word::join(Word::leaf(a), Word::leaf(b)));
  // F(g o f) = F(g) F(f) with f a braiding and g an associator-derived map
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      for (int c = 1; c < r; ++c) {
        Word A = Word::leaf(a), B = Word::leaf(b), C = Word::leaf(c);
        Morphism phi = associator(cat, A, B, C);
        Morphism psi = tensor_morphisms(cat, braiding(cat, A, B), identity_morphism(cat, C));
        close("functoriality", {a, b, c}, functor_on_morphism(F, compose(psi, phi)),
              functor_on_morphism(F, psi) * functor_on_morphism(F, phi));
      }
  // c_{Y1,Y2} (F f1 (x) F f2) = F(f1 (x) f2) c_{X1,X2}
  auto natural = [&](const Morphism& f1, const Morphism& f2, std::vector<long> where) {
    Tensorator tx = tensorator(F, f1.dom, f2.dom), ty = tensorator(F, f1.cod, f2.cod);
    Matrix lhs = ty.c * kron(functor_on_morphism(F, f1), functor_on_morphism(F, f2));
    Matrix rhs = functor_on_morphism(F, tensor_morphisms(cat, f1, f2)) * tx.c;
    close("naturality", where, lhs, rhs);
  };
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      for (const auto& f : morphism_basis(cat, pairs[i], pairs[j]))
        for (int z = 1; z < r; ++z) {
          Morphism idz = identity_morphism(cat, Word::leaf(z));
          natural(f, idz, {static_cast<long>(i), static_cast<long>(j), z, 0});
          natural(idz, f, {static_cast<long>(i), static_cast<long>(j), z, 1});
        }
  rep.merge(verify_duality(F, tol));
  return rep;
}

}  // namespace wqh
