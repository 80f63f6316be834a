#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wqh/category.hpp"
#include "wqh/fusion.hpp"

namespace wqh {

/// F(w) = sum_z Mor(z, w) (x) K^{D(z)}, ordered by label, then tree, then copy.
struct GradedSpace {
  std::vector<long> mult;  // m_z = dim Mor(z, w)
  std::vector<long> D;
  long total() const;
  long offset(int z) const;
};

struct FunctorStrategy {
  bool random = false;
  long seed = 0;
  static FunctorStrategy canonical() { return {}; }
  static FunctorStrategy with_seed(long s) { return {true, s}; }
  std::string tag() const { return random ? std::to_string(seed) : "canonical"; }
};

/// The weak quasi tensor functor: tensorators on simple pairs with right
/// inverses, and duality isomorphisms d_a : F(a)^* -> F(dual a).
struct FunctorData {
  std::shared_ptr<const CategoryData> cat;
  DimensionFunction D;
  FunctorStrategy strategy;
  std::map<std::pair<int, int>, Matrix> c;
  std::map<std::pair<int, int>, Matrix> c_inv;
  std::vector<Matrix> d;
  /// Repair attempts used per label when solving d (0 = canonical c sufficed).
  std::vector<int> repairs;

  const Matrix& tensorator_simple(int a, int b) const { return c.at({a, b}); }
  const Matrix& tensorator_inverse_simple(int a, int b) const { return c_inv.at({a, b}); }
};

/// Builds F for a weak dimension function. Throws MathError if D is not weak or
/// if no duality isomorphism is found after 16 repair attempts.
FunctorData build_functor(std::shared_ptr<const CategoryData> cat, const DimensionFunction& D,
                          FunctorStrategy strategy = FunctorStrategy::canonical());

GradedSpace functor_on_object(const FunctorData& F, const Word& w);
/// sum_z (block of f at z) (x) I_{D(z)}.
Matrix functor_on_morphism(const FunctorData& F, const Morphism& f);

struct Tensorator {
  Matrix c;      // F(w1) (x) F(w2) -> F(w1 w2)
  Matrix c_inv;  // right inverse
};
/// Extension of the simple tensorators to words through (f1 (x) f2) o g.
Tensorator tensorator(const FunctorData& F, const Word& w1, const Word& w2);

/// Solves F(ev_a) c_{dual a, a} (d_a (x) id) = ev_{F(a)}; std::nullopt if singular.
std::optional<Matrix> solve_duality(const FunctorData& F, int a);
const Matrix& duality_iso(const FunctorData& F, int a);
/// Pairing equation and d-naturality on basis morphisms between simples.
Report verify_duality(const FunctorData& F, const Tolerance& tol = {});
/// f^* = (ev_Y (x) id)(id (x) f (x) id)(id (x) coev_X) for f : X -> Y between simple leaves.
Morphism dual_morphism(const CategoryData& cat, const Morphism& f);

/// Functoriality, c c_inv = id, naturality, unit tensorators, faithfulness.
Report verify_functor(const FunctorData& F, const Tolerance& tol = {});

}  // namespace wqh
