#include <doctest.h>

#include <memory>

#include "wqh/catalog.hpp"
#include "wqh/functor.hpp"

using namespace wqh;

namespace {

std::shared_ptr<const CategoryData> cat_of(const std::string& name, int n = 2, int q = 0) {
  return std::make_shared<const CategoryData>(builtin(name, n, q).data);
}

DimensionFunction dims(std::vector<long> v) {
  DimensionFunction d;
  d.values = std::move(v);
  return d;
}

const Word tau = Word::leaf(1);

}  // namespace

TEST_CASE("Fibonacci tensorator shapes") {
  auto F = build_functor(cat_of("fibonacci"), dims({1, 2}));
  const Matrix& c = F.c.at({1, 1});
  CHECK(c.rows() == 3);
  CHECK(c.cols() == 4);
  CHECK(rank(c) == 3);
  CHECK((c * F.c_inv.at({1, 1})).is_identity());
  CHECK(functor_on_object(F, Word()).total() == 1);
  CHECK(functor_on_object(F, Word::join(tau, tau)).total() == 3);
  auto g = functor_on_object(F, Word::left_nested({1, 1, 1}));
  CHECK(g.mult == std::vector<long>{1, 2});
  CHECK(g.total() == 5);
  auto t = tensorator(F, tau, Word::join(tau, tau));
  CHECK(t.c.rows() == 5);
  CHECK(t.c.cols() == 6);
  CHECK(rank(t.c) == 5);
  CHECK((t.c * t.c_inv).is_identity());
}

TEST_CASE("Ising tensorator shapes") {
  auto F = build_functor(cat_of("ising"), dims({1, 2, 1}));
  CHECK(F.c.at({1, 1}).rows() == 2);
  CHECK(F.c.at({1, 1}).cols() == 4);
  const Matrix& c = F.c.at({1, 2});
  CHECK(c.rows() == 2);
  CHECK(c.cols() == 2);
  CHECK(inverse(c).has_value());
  // [I|0] pairs sigma only through its first basis vector, so a repair is forced
  CHECK(F.repairs[1] > 0);
  CHECK(verify_functor(F).ok());
}

TEST_CASE("pointed categories with D = 1") {
  auto F = build_functor(cat_of("vec_zn", 3, 1), dims({1, 1, 1}));
  for (const auto& [k, c] : F.c) CHECK(c.is_identity());
  for (int a = 0; a < 3; ++a) {
    CHECK(F.d[a].rows() == 1);
    CHECK(!F.d[a](0, 0).is_zero());
  }
  CHECK(verify_functor(F).ok());
}

TEST_CASE("functor on morphisms") {
  auto cat = cat_of("fibonacci");
  auto F = build_functor(cat, dims({1, 2}));
  Word tt = Word::join(tau, tau);
  CHECK(functor_on_morphism(F, identity_morphism(*cat, tt)).is_identity());
  Scalar lam = Rational(3, 7);
  CHECK(functor_on_morphism(F, scale(lam, identity_morphism(*cat, tt))) == Matrix::identity(3) * lam);
  // channel 1 appears once, channel tau twice
  Matrix br = functor_on_morphism(F, braiding(*cat, tau, tau));
  Matrix expect(3, 3);
  expect(0, 0) = cat->rmatrix(1, 1, 0)(0, 0);
  expect(1, 1) = expect(2, 2) = cat->rmatrix(1, 1, 1)(0, 0);
  CHECK(br == expect);
}

TEST_CASE("naturality of the word tensorator under a braiding") {
  auto cat = cat_of("fibonacci");
  for (auto strategy : {FunctorStrategy::canonical(), FunctorStrategy::with_seed(7)}) {
    auto F = build_functor(cat, dims({1, 2}), strategy);
    Word tt = Word::join(tau, tau);
    Morphism f = braiding(*cat, tau, tau);
    Morphism g = identity_morphism(*cat, tau);
    Matrix lhs = functor_on_morphism(F, tensor_morphisms(*cat, f, g)) * tensorator(F, tt, tau).c;
    Matrix rhs = tensorator(F, tt, tau).c * kron(functor_on_morphism(F, f), functor_on_morphism(F, g));
    CHECK(lhs == rhs);
    lhs = functor_on_morphism(F, tensor_morphisms(*cat, g, f)) * tensorator(F, tau, tt).c;
    rhs = tensorator(F, tau, tt).c * kron(functor_on_morphism(F, g), functor_on_morphism(F, f));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("unit word tensorators are identities") {
  auto F = build_functor(cat_of("fibonacci"), dims({1, 2}), FunctorStrategy::with_seed(3));
  Word tt = Word::join(tau, tau);
  auto t = tensorator(F, Word(), tt);
  CHECK(t.c.is_identity());
  CHECK(tensorator(F, tt, Word()).c.is_identity());
}

TEST_CASE("duality isomorphisms") {
  auto F = build_functor(cat_of("fibonacci"), dims({1, 2}));
  CHECK(F.d[0].rows() == 1);
  CHECK(!F.d[0](0, 0).is_zero());
  CHECK(F.d[1].rows() == 2);
  CHECK(inverse(F.d[1]).has_value());
  CHECK(verify_duality(F).ok());
  auto G = build_functor(cat_of("vec_zn", 3, 0), dims({1, 1, 1}));
  CHECK(verify_duality(G).ok());
}

TEST_CASE("canonical and seeded functors pass verification") {
  auto cat = cat_of("fibonacci");
  for (auto s : {FunctorStrategy::canonical(), FunctorStrategy::with_seed(7), FunctorStrategy::with_seed(8)}) {
    CAPTURE(s.tag());
    auto F = build_functor(cat, dims({1, 2}), s);
    auto rep = verify_functor(F);
    CHECK_MESSAGE(rep.ok(), rep.human());
  }
}

TEST_CASE("seeds give different tensorators with the same projector") {
  auto cat = cat_of("fibonacci");
  auto A = build_functor(cat, dims({1, 2}), FunctorStrategy::with_seed(7));
  auto B = build_functor(cat, dims({1, 2}), FunctorStrategy::with_seed(8));
  auto C = build_functor(cat, dims({1, 2}), FunctorStrategy::with_seed(7));
  CHECK(A.c.at({1, 1}) != B.c.at({1, 1}));
  CHECK(A.c.at({1, 1}) == C.c.at({1, 1}));
  Matrix pa = A.c_inv.at({1, 1}) * A.c.at({1, 1});
  Matrix pb = B.c_inv.at({1, 1}) * B.c.at({1, 1});
  CHECK(pa == pb);
  CHECK(pa * pa == pa);
  CHECK(rank(pa) == 3);
}

TEST_CASE("corrupted right inverse is located") {
  auto F = build_functor(cat_of("fibonacci"), dims({1, 2}));
  F.c_inv.at({1, 1})(0, 0) += Scalar(1);
  auto rep = verify_functor(F);
  CHECK_FALSE(rep.passed("tensorator_split"));
  const Check* c = rep.find("tensorator_split");
  REQUIRE(c != nullptr);
  REQUIRE(c->witness_indices.size() == 1);
  CHECK(c->witness_indices[0] == std::vector<long>{1, 1});
}

TEST_CASE("non-weak dimension functions are rejected") {
  CHECK_THROWS_AS(build_functor(cat_of("fibonacci"), dims({1, 1})), MathError);
}
