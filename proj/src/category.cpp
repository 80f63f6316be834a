#include "wqh/category.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "category_layout.hpp"

namespace wqh {

struct Word::Node {
  int label = -1;
  Word left;
  Word right;
};

Word Word::leaf(int label) {
  Word w;
  auto n = std::make_shared<Node>();
  n->label = label;
  w.node_ = std::move(n);
  return w;
}

Word Word::join(const Word& left, const Word& right) {
  if (left.is_unit()) return right;
  if (right.is_unit()) return left;
  Word w;
  auto n = std::make_shared<Node>();
  n->left = left;
  n->right = right;
  w.node_ = std::move(n);
  return w;
}

Word Word::left_nested(const std::vector<int>& labels) {
  Word w;
  for (int a : labels) w = join(w, leaf(a));
  return w;
}

bool Word::is_leaf() const { return node_ != nullptr && node_->label >= 0; }

int Word::label() const {
  if (!is_leaf()) throw std::logic_error("Word::label on a non-leaf");
  return node_->label;
}

const Word& Word::left() const {
  if (is_unit() || is_leaf()) throw std::logic_error("Word::left on a non-node");
  return node_->left;
}

const Word& Word::right() const {
  if (is_unit() || is_leaf()) throw std::logic_error("Word::right on a non-node");
  return node_->right;
}

std::vector<int> Word::leaves() const {
  if (is_unit()) return {};
  if (is_leaf()) return {label()};
  auto l = left().leaves();
  auto r = right().leaves();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

std::string Word::to_string(const FusionRing& ring) const {
  if (is_unit()) return "1";
  if (is_leaf()) return ring.label(label());
  return "(" + left().to_string(ring) + " " + right().to_string(ring) + ")";
}

bool operator==(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_unit() || b.is_unit()) return false;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.label() == b.label();
  return a.left() == b.left() && a.right() == b.right();
}

std::vector<FChannel> f_left_channels(const FusionRing& ring, int a, int b, int c, int d) {
  std::vector<FChannel> out;
  for (int e = 0; e < ring.rank(); ++e)
    for (int i = 0; i < ring.N(a, b, e); ++i)
      for (int o = 0; o < ring.N(e, c, d); ++o) out.push_back({e, i, o});
  return out;
}

std::vector<FChannel> f_right_channels(const FusionRing& ring, int a, int b, int c, int d) {
  std::vector<FChannel> out;
  for (int f = 0; f < ring.rank(); ++f)
    for (int i = 0; i < ring.N(b, c, f); ++i)
      for (int o = 0; o < ring.N(a, f, d); ++o) out.push_back({f, i, o});
  return out;
}

Matrix CategoryData::fmatrix(int a, int b, int c, int d) const {
  auto it = F.find({a, b, c, d});
  if (it != F.end()) return it->second;
  std::size_t n = f_left_channels(ring, a, b, c, d).size();
  if (n != f_right_channels(ring, a, b, c, d).size())
    throw InputError("recoupling spaces of different dimension");
  return Matrix::identity(n);
}

Matrix CategoryData::rmatrix(int a, int b, int c) const {
  auto it = R.find({a, b, c});
  if (it != R.end()) return it->second;
  return Matrix::identity(ring.N(a, b, c));
}

void CategoryData::fill_defaults() {
  const int r = rank();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        if (ring.N(a, b, c) > 0 && !R.count({a, b, c})) R[{a, b, c}] = rmatrix(a, b, c);
        for (int d = 0; d < r; ++d)
          if (!f_left_channels(ring, a, b, c, d).empty() && !F.count({a, b, c, d}))
            F[{a, b, c, d}] = fmatrix(a, b, c, d);
      }
  if (theta.empty()) theta.assign(r, Scalar(1));
}

std::vector<long> word_dims(const FusionRing& ring, const Word& w) {
  const int r = ring.rank();
  std::vector<long> out(r, 0);
  if (w.is_unit()) {
    out[0] = 1;
    return out;
  }
  if (w.is_leaf()) {
    out[w.label()] = 1;
    return out;
  }
  auto l = word_dims(ring, w.left());
  auto rr = word_dims(ring, w.right());
  for (int x = 0; x < r; ++x) {
    if (l[x] == 0) continue;
    for (int y = 0; y < r; ++y) {
      if (rr[y] == 0) continue;
      for (int z = 0; z < r; ++z) out[z] += ring.N(x, y, z) * l[x] * rr[y];
    }
  }
  return out;
}

long word_dim(const FusionRing& ring, int z, const Word& w) { return word_dims(ring, w).at(z); }

PairLayout::PairLayout(const FusionRing& ring, int z, const std::vector<long>& dims_a,
                       const std::vector<long>& dims_b)
    : rank_(ring.rank()), index_(static_cast<std::size_t>(rank_ * rank_), -1) {
  long off = 0;
  for (int x = 0; x < rank_; ++x) {
    if (dims_a[x] == 0) continue;
    for (int y = 0; y < rank_; ++y) {
      int m = ring.N(x, y, z);
      if (dims_b[y] == 0 || m == 0) continue;
      index_[x * rank_ + y] = static_cast<int>(blocks_.size());
      blocks_.push_back({x, y, m, off, dims_a[x], dims_b[y]});
      off += m * dims_a[x] * dims_b[y];
    }
  }
  total_ = off;
}

const PairBlock* PairLayout::find(int x, int y) const {
  int k = index_[x * rank_ + y];
  return k < 0 ? nullptr : &blocks_[k];
}

std::vector<PairLayout> pair_layouts(const FusionRing& ring, const Word& a, const Word& b) {
  auto da = word_dims(ring, a);
  auto db = word_dims(ring, b);
  std::vector<PairLayout> out;
  for (int z = 0; z < ring.rank(); ++z) out.emplace_back(ring, z, da, db);
  return out;
}

namespace {

void enumerate_trees(const FusionRing& ring, int z, const Word& w, std::vector<FusionTree>& out) {
  if (w.is_unit()) {
    if (z == 0) {
      FusionTree t;
      t.top = 0;
      out.push_back(t);
    }
    return;
  }
  if (w.is_leaf()) {
    if (z == w.label()) {
      FusionTree t;
      t.top = z;
      t.leaf_label = z;
      out.push_back(t);
    }
    return;
  }
  PairLayout layout(ring, z, word_dims(ring, w.left()), word_dims(ring, w.right()));
  for (const auto& b : layout.blocks()) {
    std::vector<FusionTree> ls, rs;
    enumerate_trees(ring, b.x, w.left(), ls);
    enumerate_trees(ring, b.y, w.right(), rs);
    for (const auto& l : ls)
      for (const auto& r : rs)
        for (int mu = 0; mu < b.mult; ++mu) {
          FusionTree t;
          t.top = z;
          t.left_label = b.x;
          t.right_label = b.y;
          t.multiplicity = mu;
          t.left = std::make_shared<FusionTree>(l);
          t.right = std::make_shared<FusionTree>(r);
          out.push_back(t);
        }
  }
}

}  // namespace

std::vector<FusionTree> tree_basis(const CategoryData& cat, int z, const Word& w) {
  std::vector<FusionTree> out;
  enumerate_trees(cat.ring, z, w, out);
  return out;
}

std::string FusionTree::to_string(const FusionRing& ring) const {
  if (leaf_label >= 0) return ring.label(leaf_label);
  if (left_label < 0) return "id_1";
  std::string s = ring.label(top) + "->[" + left->to_string(ring) + ", " + right->to_string(ring) + "]";
  if (multiplicity > 0) s += "#" + std::to_string(multiplicity);
  return s;
}

}  // namespace wqh

namespace wqh {

bool Morphism::is_zero() const {
  for (const auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.dom == b.dom && a.cod == b.cod && a.blocks == b.blocks;
}

Morphism zero_morphism(const CategoryData& cat, const Word& dom, const Word& cod) {
  auto dd = word_dims(cat.ring, dom);
  auto dc = word_dims(cat.ring, cod);
  Morphism m{dom, cod, {}};
  for (int z = 0; z < cat.rank(); ++z) m.blocks.emplace_back(dc[z], dd[z]);
  return m;
}

Morphism identity_morphism(const CategoryData& cat, const Word& w) {
  auto d = word_dims(cat.ring, w);
  Morphism m{w, w, {}};
  for (int z = 0; z < cat.rank(); ++z) m.blocks.push_back(Matrix::identity(d[z]));
  return m;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (g.cod != f.dom) throw std::invalid_argument("compose: codomain/domain mismatch");
  Morphism m{g.dom, f.cod, {}};
  for (std::size_t z = 0; z < f.blocks.size(); ++z) m.blocks.push_back(f.blocks[z] * g.blocks[z]);
  return m;
}

Morphism scale(const Scalar& s, Morphism f) {
  for (auto& b : f.blocks) b *= s;
  return f;
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw std::invalid_argument("add: word mismatch");
  Morphism m = f;
  for (std::size_t z = 0; z < f.blocks.size(); ++z) m.blocks[z] += g.blocks[z];
  return m;
}

Morphism invert(const Morphism& f) {
  Morphism m{f.cod, f.dom, {}};
  for (const auto& b : f.blocks) {
    auto inv = inverse(b);
    if (!inv) throw MathError("morphism is not invertible");
    m.blocks.push_back(std::move(*inv));
  }
  return m;
}

Morphism tensor_morphisms(const CategoryData& cat, const Morphism& f, const Morphism& g) {
  const auto& ring = cat.ring;
  const int r = cat.rank();
  Morphism m = zero_morphism(cat, Word::join(f.dom, g.dom), Word::join(f.cod, g.cod));
  auto dom_layout = pair_layouts(ring, f.dom, g.dom);
  auto cod_layout = pair_layouts(ring, f.cod, g.cod);
  for (int z = 0; z < r; ++z) {
    Matrix& out = m.blocks[z];
    for (const auto& db : dom_layout[z].blocks()) {
      const PairBlock* cb = cod_layout[z].find(db.x, db.y);
      if (cb == nullptr) continue;
      const Matrix& fx = f.blocks[db.x];
      const Matrix& gy = g.blocks[db.y];
      for (long i = 0; i < cb->dim_a; ++i)
        for (long j = 0; j < db.dim_a; ++j) {
          const Scalar& a = fx(i, j);
          if (a.is_zero()) continue;
          for (long p = 0; p < cb->dim_b; ++p)
            for (long q = 0; q < db.dim_b; ++q) {
              const Scalar& b = gy(p, q);
              if (b.is_zero()) continue;
              Scalar v = a * b;
              for (int mu = 0; mu < db.mult; ++mu) out(cb->index(i, p, mu), db.index(j, q, mu)) = v;
            }
        }
    }
  }
  return m;
}

Morphism associator(const CategoryData& cat, const Word& a, const Word& b, const Word& c) {
  const auto& ring = cat.ring;
  const int r = cat.rank();
  Word bc = Word::join(b, c);
  Word ab = Word::join(a, b);
  Morphism m = zero_morphism(cat, Word::join(a, bc), Word::join(ab, c));
  auto da = word_dims(ring, a), db = word_dims(ring, b), dc = word_dims(ring, c);
  auto dbc = word_dims(ring, bc), dab = word_dims(ring, ab);
  std::vector<PairLayout> outer_dom, inner_bc, outer_cod, inner_ab;
  for (int z = 0; z < r; ++z) {
    outer_dom.emplace_back(ring, z, da, dbc);
    inner_bc.emplace_back(ring, z, db, dc);
    outer_cod.emplace_back(ring, z, dab, dc);
    inner_ab.emplace_back(ring, z, da, db);
  }
  for (int z = 0; z < r; ++z) {
    Matrix& out = m.blocks[z];
    for (int x = 0; x < r; ++x) {
      if (da[x] == 0) continue;
      for (int y = 0; y < r; ++y) {
        if (db[y] == 0) continue;
        for (int w = 0; w < r; ++w) {
          if (dc[w] == 0) continue;
          auto left = f_left_channels(ring, x, y, w, z);
          auto right = f_right_channels(ring, x, y, w, z);
          if (left.empty() && right.empty()) continue;
          Matrix F = cat.fmatrix(x, y, w, z);
          for (long ta = 0; ta < da[x]; ++ta)
            for (long tb = 0; tb < db[y]; ++tb)
              for (long tc = 0; tc < dc[w]; ++tc)
                for (std::size_t j = 0; j < right.size(); ++j) {
                  const FChannel& rc = right[j];
                  long t_bc = inner_bc[rc.label].find(y, w)->index(tb, tc, rc.inner);
                  long col = outer_dom[z].find(x, rc.label)->index(ta, t_bc, rc.outer);
                  for (std::size_t i = 0; i < left.size(); ++i) {
                    if (F(i, j).is_zero()) continue;
                    const FChannel& lc = left[i];
                    long t_ab = inner_ab[lc.label].find(x, y)->index(ta, tb, lc.inner);
                    long row = outer_cod[z].find(lc.label, w)->index(t_ab, tc, lc.outer);
                    out(row, col) = F(i, j);
                  }
                }
        }
      }
    }
  }
  return m;
}

Morphism braiding(const CategoryData& cat, const Word& a, const Word& b) {
  const auto& ring = cat.ring;
  const int r = cat.rank();
  Morphism m = zero_morphism(cat, Word::join(a, b), Word::join(b, a));
  auto dom_layout = pair_layouts(ring, a, b);
  auto cod_layout = pair_layouts(ring, b, a);
  for (int z = 0; z < r; ++z) {
    for (const auto& d : dom_layout[z].blocks()) {
      const PairBlock* c = cod_layout[z].find(d.y, d.x);
      Matrix R = cat.rmatrix(d.x, d.y, z);
      for (long ta = 0; ta < d.dim_a; ++ta)
        for (long tb = 0; tb < d.dim_b; ++tb)
          for (int mu = 0; mu < d.mult; ++mu)
            for (int nu = 0; nu < c->mult; ++nu)
              m.blocks[z](c->index(tb, ta, nu), d.index(ta, tb, mu)) = R(nu, mu);
    }
  }
  return m;
}

Morphism twist_morphism(const CategoryData& cat, const Word& w) {
  Morphism m = identity_morphism(cat, w);
  for (int z = 0; z < cat.rank(); ++z) m.blocks[z] *= cat.theta.at(z);
  return m;
}

std::vector<Morphism> morphism_basis(const CategoryData& cat, const Word& dom, const Word& cod) {
  std::vector<Morphism> out;
  Morphism zero = zero_morphism(cat, dom, cod);
  for (int z = 0; z < cat.rank(); ++z)
    for (std::size_t i = 0; i < zero.blocks[z].rows(); ++i)
      for (std::size_t j = 0; j < zero.blocks[z].cols(); ++j) {
        Morphism e = zero;
        e.blocks[z](i, j) = 1;
        out.push_back(std::move(e));
      }
  return out;
}

}  // namespace wqh

namespace wqh {

double morphism_deviation(const Morphism& a, const Morphism& b) {
  if (a.dom != b.dom || a.cod != b.cod) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t z = 0; z < a.blocks.size(); ++z) worst = std::max(worst, max_deviation(a.blocks[z], b.blocks[z]));
  return worst;
}

bool morphisms_close(const Morphism& a, const Morphism& b, const Tolerance& tol) {
  if (a.dom != b.dom || a.cod != b.cod) return false;
  for (std::size_t z = 0; z < a.blocks.size(); ++z)
    if (!matrices_close(a.blocks[z], b.blocks[z], tol)) return false;
  return true;
}

namespace {

void compare(Report& rep, const std::string& id, const std::vector<long>& where, const Morphism& lhs,
             const Morphism& rhs, const Tolerance& tol) {
  bool ok = morphisms_close(lhs, rhs, tol);
  rep.observe(id, where, ok, ok && tol.tol == 0.0 ? 0.0 : morphism_deviation(lhs, rhs));
}

}  // namespace

Report verify_pentagon(const CategoryData& cat, const Tolerance& tol) {
  Report rep;
  rep.entry("pentagon");
  const int r = cat.rank();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          Word A = Word::leaf(a), B = Word::leaf(b), C = Word::leaf(c), D = Word::leaf(d);
          Morphism lhs = compose(associator(cat, Word::join(A, B), C, D), associator(cat, A, B, Word::join(C, D)));
          Morphism rhs = compose(
              tensor_morphisms(cat, associator(cat, A, B, C), identity_morphism(cat, D)),
              compose(associator(cat, A, Word::join(B, C), D),
                      tensor_morphisms(cat, identity_morphism(cat, A), associator(cat, B, C, D))));
          compare(rep, "pentagon", {a, b, c, d}, lhs, rhs, tol);
        }
  return rep;
}

Report verify_hexagons(const CategoryData& cat, const Tolerance& tol) {
  Report rep;
  rep.entry("hexagon_1");
  rep.entry("hexagon_2");
  const int r = cat.rank();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        Word A = Word::leaf(a), B = Word::leaf(b), C = Word::leaf(c);
        Morphism idA = identity_morphism(cat, A), idC = identity_morphism(cat, C);
        // Psi_{A,BC} = Phi_{B,C,A} (1 Psi_{A,C}) Phi_{B,A,C}^-1 (Psi_{A,B} 1) Phi_{A,B,C}
        Morphism lhs1 = braiding(cat, A, Word::join(B, C));
        Morphism rhs1 = compose(
            associator(cat, B, C, A),
            compose(tensor_morphisms(cat, identity_morphism(cat, B), braiding(cat, A, C)),
                    compose(invert(associator(cat, B, A, C)),
                            compose(tensor_morphisms(cat, braiding(cat, A, B), idC), associator(cat, A, B, C)))));
        compare(rep, "hexagon_1", {a, b, c}, lhs1, rhs1, tol);
        // Phi_{C,A,B} Psi_{AB,C} Phi_{A,B,C} = (Psi_{A,C} 1) Phi_{A,C,B} (1 Psi_{B,C})
        Morphism lhs2 = compose(associator(cat, C, A, B),
                                compose(braiding(cat, Word::join(A, B), C), associator(cat, A, B, C)));
        Morphism rhs2 = compose(tensor_morphisms(cat, braiding(cat, A, C), identity_morphism(cat, B)),
                                compose(associator(cat, A, C, B), tensor_morphisms(cat, idA, braiding(cat, B, C))));
        compare(rep, "hexagon_2", {a, b, c}, lhs2, rhs2, tol);
      }
  return rep;
}

namespace {

// (id_a ev) Phi^-1_{a,dual a,a} (coev id_a) as an endomorphism of a.
Morphism first_snake(const CategoryData& cat, int a, const Morphism& ev, const Morphism& coev) {
  Word A = Word::leaf(a), D = Word::leaf(cat.ring.dual(a));
  Morphism idA = identity_morphism(cat, A);
  return compose(tensor_morphisms(cat, idA, ev),
                 compose(invert(associator(cat, A, D, A)), tensor_morphisms(cat, coev, idA)));
}

// (ev id_dual) Phi_{dual a,a,dual a} (id_dual coev) as an endomorphism of dual a.
Morphism second_snake(const CategoryData& cat, int a, const Morphism& ev, const Morphism& coev) {
  Word A = Word::leaf(a), D = Word::leaf(cat.ring.dual(a));
  Morphism idD = identity_morphism(cat, D);
  return compose(tensor_morphisms(cat, ev, idD),
                 compose(associator(cat, D, A, D), tensor_morphisms(cat, idD, coev)));
}

}  // namespace

EvCoev ev_coev(const CategoryData& cat, int a) {
  const int d = cat.ring.dual(a);
  if (cat.ring.N(d, a, 0) != 1 || cat.ring.N(a, d, 0) != 1)
    throw MathError("label " + cat.ring.label(a) + " has no one-dimensional duality channel");
  Word A = Word::leaf(a), D = Word::leaf(d);
  EvCoev out{zero_morphism(cat, Word::join(D, A), Word()), zero_morphism(cat, Word(), Word::join(A, D))};
  out.coev.blocks[0](0, 0) = 1;
  out.ev.blocks[0](0, 0) = 1;
  Morphism s = first_snake(cat, a, out.ev, out.coev);
  const Scalar& k = s.blocks[a](0, 0);
  if (k.is_zero()) throw MathError("singular ev normalization at label " + cat.ring.label(a));
  out.ev.blocks[0](0, 0) = k.inverse();
  return out;
}

Report verify_snakes(const CategoryData& cat, const Tolerance& tol) {
  Report rep;
  rep.entry("snake_1");
  rep.entry("snake_2");
  for (int a = 0; a < cat.rank(); ++a) {
    EvCoev e;
    try {
      e = ev_coev(cat, a);
    } catch (const MathError& err) {
      rep.fail("snake_1", {a}, err.what());
      continue;
    }
    Word A = Word::leaf(a), D = Word::leaf(cat.ring.dual(a));
    compare(rep, "snake_1", {a}, first_snake(cat, a, e.ev, e.coev), identity_morphism(cat, A), tol);
    compare(rep, "snake_2", {a}, second_snake(cat, a, e.ev, e.coev), identity_morphism(cat, D), tol);
  }
  return rep;
}

Report verify_ribbon(const CategoryData& cat, const Tolerance& tol) {
  Report rep;
  const auto& ring = cat.ring;
  const int r = cat.rank();
  if (static_cast<int>(cat.theta.size()) != r) {
    rep.fail("theta_defined", {static_cast<long>(cat.theta.size())});
    return rep;
  }
  rep.observe("theta_unit", {0}, tol.close(cat.theta[0], Scalar(1)), deviation(cat.theta[0], Scalar(1)));
  for (int a = 0; a < r; ++a) {
    const Scalar& t = cat.theta[a];
    const Scalar& td = cat.theta[ring.dual(a)];
    rep.observe("theta_dual", {a}, tol.close(t, td), deviation(t, td));
  }
  rep.entry("double_braid");
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c : ring.channels(a, b)) {
        Matrix lhs = cat.rmatrix(b, a, c) * cat.rmatrix(a, b, c);
        Matrix rhs = Matrix::identity(ring.N(a, b, c)) * (cat.theta[a] * cat.theta[b] / cat.theta[c]);
        bool ok = matrices_close(lhs, rhs, tol);
        rep.observe("double_braid", {a, b, c}, ok, max_deviation(lhs, rhs));
      }
  return rep;
}

Scalar dimension(const CategoryData& cat, int a) {
  const int d = cat.ring.dual(a);
  Word A = Word::leaf(a), D = Word::leaf(d);
  EvCoev e = ev_coev(cat, a);
  Morphism sigma_inv = twist_morphism(cat, A);
  for (auto& b : sigma_inv.blocks)
    if (!b.empty()) b(0, 0) = b(0, 0).inverse();
  Morphism m = compose(e.ev, compose(tensor_morphisms(cat, identity_morphism(cat, D), sigma_inv),
                                     compose(braiding(cat, A, D), e.coev)));
  return m.blocks[0](0, 0);
}

std::vector<Scalar> dimensions(const CategoryData& cat) {
  std::vector<Scalar> out;
  for (int a = 0; a < cat.rank(); ++a) out.push_back(dimension(cat, a));
  return out;
}

Scalar trace(const CategoryData& cat, const Morphism& f) {
  if (f.dom != f.cod) throw std::invalid_argument("trace: not an endomorphism");
  auto d = dimensions(cat);
  Scalar s;
  for (int z = 0; z < cat.rank(); ++z) {
    const Matrix& b = f.blocks[z];
    Scalar t;
    for (std::size_t i = 0; i < b.rows(); ++i) t += b(i, i);
    if (!t.is_zero()) s += t * d[z];
  }
  return s;
}

Morphism conditional_expectation(const CategoryData& cat, const Morphism& f, const Word& A, int X) {
  Word AX = Word::join(A, Word::leaf(X));
  if (f.dom != AX || f.cod != AX) throw std::invalid_argument("conditional_expectation: shape mismatch");
  const auto& ring = cat.ring;
  auto d = dimensions(cat);
  auto dx = word_dims(ring, Word::leaf(X));
  auto da = word_dims(ring, A);
  Morphism out = zero_morphism(cat, A, A);
  for (int z = 0; z < cat.rank(); ++z) {
    PairLayout layout(ring, z, da, dx);
    for (const auto& blk : layout.blocks()) {
      int y = blk.x;
      Scalar w = d[z] / d[y];
      for (long i = 0; i < blk.dim_a; ++i)
        for (long j = 0; j < blk.dim_a; ++j)
          for (int mu = 0; mu < blk.mult; ++mu) {
            const Scalar& v = f.blocks[z](blk.index(i, 0, mu), blk.index(j, 0, mu));
            if (!v.is_zero()) out.blocks[y](i, j) += w * v;
          }
    }
  }
  return out;
}

}  // namespace wqh
