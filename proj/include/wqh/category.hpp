#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wqh/fusion.hpp"
#include "wqh/matrix.hpp"
#include "wqh/report.hpp"
#include "wqh/scalar.hpp"

namespace wqh {

/// Formal tensor expression: a full binary tree of simple labels. The default
/// word is the unit object; joining with the unit returns the other word.
class Word {
 public:
  Word() = default;
  static Word leaf(int label);
  static Word join(const Word& left, const Word& right);
  /// Left-nested product ((a b) c) ... of leaves.
  static Word left_nested(const std::vector<int>& labels);

  bool is_unit() const { return node_ == nullptr; }
  bool is_leaf() const;
  int label() const;
  const Word& left() const;
  const Word& right() const;
  std::vector<int> leaves() const;
  std::string to_string(const FusionRing& ring) const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Channel (e, inner multiplicity, outer multiplicity) of a recoupling basis.
struct FChannel {
  int label;
  int inner;
  int outer;
  friend bool operator==(const FChannel&, const FChannel&) = default;
};

/// Basis of Mor(d, (a b) c): e with a b -> e (inner) and e c -> d (outer).
std::vector<FChannel> f_left_channels(const FusionRing& ring, int a, int b, int c, int d);
/// Basis of Mor(d, a (b c)): f with b c -> f (inner) and a f -> d (outer).
std::vector<FChannel> f_right_channels(const FusionRing& ring, int a, int b, int c, int d);

/// Moore-Seiberg presentation of a skeletal ribbon category.
///
/// F(a,b,c;d) has rows indexed by f_left_channels and columns by
/// f_right_channels: the associator a(bc) -> (ab)c sends the right basis
/// vector in column j to sum_i F(i,j) times left basis vector i.
/// R(a,b;c)(nu,mu) is the coefficient of split_{c->ba,nu} in
/// Psi_{a,b} o split_{c->ab,mu}. Absent matrices mean the identity.
struct CategoryData {
  std::string name;
  FusionRing ring;
  std::map<std::array<int, 4>, Matrix> F;
  std::map<std::array<int, 3>, Matrix> R;
  std::vector<Scalar> theta;

  int rank() const { return ring.rank(); }
  Matrix fmatrix(int a, int b, int c, int d) const;
  Matrix rmatrix(int a, int b, int c) const;
  /// Inserts explicit identities for every admissible tuple that has no stored matrix.
  void fill_defaults();
};

/// Dimension of Mor(z, w) for every simple z.
std::vector<long> word_dims(const FusionRing& ring, const Word& w);
long word_dim(const FusionRing& ring, int z, const Word& w);

/// One element of the splitting-tree basis of Mor(z, w).
struct FusionTree {
  int top = 0;             // z
  int leaf_label = -1;     // set for leaf words
  int left_label = -1;     // x, y and mu for node words
  int right_label = -1;
  int multiplicity = 0;
  std::shared_ptr<FusionTree> left;
  std::shared_ptr<FusionTree> right;
  std::string to_string(const FusionRing& ring) const;
};

/// Ordered basis of Mor(z, w): channel pairs (x, y) in label order, then the
/// left subtree, the right subtree, and the vertex multiplicity innermost.
std::vector<FusionTree> tree_basis(const CategoryData& cat, int z, const Word& w);

/// Morphism of the skeletal category: one matrix per simple z acting on
/// splitting trees, column j = image of basis tree j of the domain.
struct Morphism {
  Word dom;
  Word cod;
  std::vector<Matrix> blocks;

  bool is_zero() const;
  friend bool operator==(const Morphism& a, const Morphism& b);
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }
};

Morphism identity_morphism(const CategoryData& cat, const Word& w);
Morphism zero_morphism(const CategoryData& cat, const Word& dom, const Word& cod);
/// f o g; throws std::invalid_argument when cod(g) != dom(f).
Morphism compose(const Morphism& f, const Morphism& g);
Morphism scale(const Scalar& s, Morphism f);
Morphism add(const Morphism& f, const Morphism& g);
/// Blockwise inverse; throws MathError if some block is singular.
Morphism invert(const Morphism& f);
Morphism tensor_morphisms(const CategoryData& cat, const Morphism& f, const Morphism& g);
/// Phi_{a,b,c}: a(bc) -> (ab)c.
Morphism associator(const CategoryData& cat, const Word& a, const Word& b, const Word& c);
/// Psi_{a,b}: ab -> ba.
Morphism braiding(const CategoryData& cat, const Word& a, const Word& b);
/// sigma on a word: theta(z) on the block of z.
Morphism twist_morphism(const CategoryData& cat, const Word& w);
/// Basis of Mor(dom, cod): one morphism per nonzero matrix unit of each block.
std::vector<Morphism> morphism_basis(const CategoryData& cat, const Word& dom, const Word& cod);

double morphism_deviation(const Morphism& a, const Morphism& b);
bool morphisms_close(const Morphism& a, const Morphism& b, const Tolerance& tol);

Report verify_pentagon(const CategoryData& cat, const Tolerance& tol = {});
Report verify_hexagons(const CategoryData& cat, const Tolerance& tol = {});

struct EvCoev {
  Morphism ev;    // dual(a) a -> 1
  Morphism coev;  // 1 -> a dual(a)
};
/// coev is the canonical basis vector; ev is solved from the first snake.
/// Throws MathError when the normalization equation is singular.
EvCoev ev_coev(const CategoryData& cat, int a);
/// Both snake identities for every label.
Report verify_snakes(const CategoryData& cat, const Tolerance& tol = {});
/// theta(1)=1, theta(dual a)=theta(a), and the double braid equals theta(a)theta(b)/theta(c) per channel.
Report verify_ribbon(const CategoryData& cat, const Tolerance& tol = {});

/// tr(f) for an endomorphism f; throws std::invalid_argument otherwise.
Scalar trace(const CategoryData& cat, const Morphism& f);
/// d(a) evaluated from the composite ev o (id (x) sigma^-1) o Psi o coev.
Scalar dimension(const CategoryData& cat, int a);
std::vector<Scalar> dimensions(const CategoryData& cat);
/// E_X : End(A X) -> End(A).
Morphism conditional_expectation(const CategoryData& cat, const Morphism& f, const Word& A, int X);

}  // namespace wqh
