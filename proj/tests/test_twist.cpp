#include <doctest.h>

#include <memory>

#include "wqh/catalog.hpp"
#include "wqh/twist.hpp"

using namespace wqh;

namespace {

struct Fixture {
  std::shared_ptr<const CategoryData> cat;
  DimensionFunction D;
  Fixture(const std::string& name, std::vector<long> dims, int n = 2, int q = 0)
      : cat(std::make_shared<const CategoryData>(builtin(name, n, q).data)) {
    D.values = std::move(dims);
  }
  WQHopf hopf(FunctorStrategy s) const {
    return reconstruct(std::make_shared<const FunctorData>(build_functor(cat, D, s)));
  }
};

}  // namespace

TEST_CASE("self twist is the coproduct of unity") {
  Fixture fx("fibonacci", {1, 2});
  auto H = fx.hopf(FunctorStrategy::with_seed(3));
  auto tw = twist_between(H, H);
  CHECK(tw.T == H.delta_unit);
  CHECK(tw.T_inv == H.delta_unit);
  CHECK(verify_twist(H, H, tw).ok());
}

TEST_CASE("Fibonacci canonical versus seed 7") {
  Fixture fx("fibonacci", {1, 2});
  auto H1 = fx.hopf(FunctorStrategy::canonical());
  auto H2 = fx.hopf(FunctorStrategy::with_seed(7));
  auto tw = twist_between(H1, H2);
  CHECK(tw.T * tw.T_inv == H1.delta_unit);
  CHECK(tw.T_inv * tw.T == H1.delta_unit);
  CHECK(rank(tw.T.at({1, 1})) == 3);
  CHECK(!(tw.T == H1.delta_unit));
  auto rep = verify_twist(H1, H2, tw);
  CHECK_MESSAGE(rep.ok(), rep.human());
}

TEST_CASE("Z/3 gauges give the ratio family") {
  Fixture fx("vec_zn", {1, 1, 1}, 3, 1);
  auto H1 = fx.hopf(FunctorStrategy::with_seed(3));
  auto H2 = fx.hopf(FunctorStrategy::with_seed(11));
  auto tw = twist_between(H1, H2);
  for (const auto& [t, m] : tw.T.blocks) {
    const Scalar c1 = H1.functor->c.at({t[0], t[1]})(0, 0);
    const Scalar c2 = H2.functor->c.at({t[0], t[1]})(0, 0);
    CHECK(m(0, 0) == c1 / c2);
  }
  CHECK(verify_twist(H1, H2, tw).ok());
}

TEST_CASE("transposed twist breaks the R transport") {
  Fixture fx("fibonacci", {1, 2});
  auto H1 = fx.hopf(FunctorStrategy::canonical());
  auto H2 = fx.hopf(FunctorStrategy::with_seed(7));
  auto tw = twist_between(H1, H2);
  tw.T.at({1, 1}) = tw.T.at({1, 1}).transpose();
  auto rep = verify_twist(H1, H2, tw);
  CHECK_FALSE(rep.passed("R_transport"));
  const Check* c = rep.find("R_transport");
  REQUIRE(c != nullptr);
  REQUIRE(!c->witness_indices.empty());
  CHECK(c->witness_indices[0] == std::vector<long>{1, 1});
}

TEST_CASE("mismatched dimension functions are rejected") {
  Fixture a("fibonacci", {1, 2}), b("fibonacci", {1, 3});
  CHECK_THROWS_AS(twist_between(a.hopf(FunctorStrategy::canonical()), b.hopf(FunctorStrategy::canonical())),
                  InputError);
}

TEST_CASE("coboundary of the unit is the coproduct of unity") {
  Fixture fx("fibonacci", {1, 2});
  auto H = fx.hopf(FunctorStrategy::canonical());
  auto d = coboundary(H, make_cochain(unit_family(H.D, 1)));
  CHECK(d.gamma == H.delta_unit);
}

TEST_CASE("classical group coboundary on Z/3") {
  Fixture fx("vec_zn", {1, 1, 1}, 3, 0);
  auto H = fx.hopf(FunctorStrategy::canonical());
  const std::vector<long> g{1, 2, 3};
  Family gamma = zero_family(H.D, 1);
  for (int a = 0; a < 3; ++a) gamma.at({a})(0, 0) = g[a];
  auto d = coboundary(H, make_cochain(gamma));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(d.gamma.at({a, b})(0, 0) == Scalar(Rational(g[(a + b) % 3], g[a] * g[b])));
}

TEST_CASE("the associator is a 3-cocycle on exact pointed categories") {
  for (int n : {2, 3, 4}) {
    Fixture fx("vec_zn", std::vector<long>(n, 1), n, 1);
    auto H = fx.hopf(FunctorStrategy::canonical());
    CHECK(!(H.phi == unit_family(H.D, 3)));
    auto d = coboundary(H, Cochain{H.phi, H.phi_inv});
    CHECK(d.gamma == unit_family(H.D, 4));
  }
}

TEST_CASE("delta squared is trivial on abelian examples") {
  Fixture fx("vec_zn", {1, 1, 1, 1}, 4, 1);
  auto H = fx.hopf(FunctorStrategy::with_seed(7));
  Family g1 = zero_family(H.D, 1);
  for (int a = 0; a < 4; ++a) g1.at({a})(0, 0) = a + 1;
  auto dd = coboundary(H, coboundary(H, make_cochain(g1)));
  CHECK(dd.gamma == unit_family(H.D, 3));
  Family g2 = zero_family(H.D, 2);
  for (auto& [t, m] : g2.blocks) m(0, 0) = Rational(t[0] + 2, t[1] + 1);
  dd = coboundary(H, coboundary(H, make_cochain(g2)));
  CHECK(dd.gamma == unit_family(H.D, 4));
}

TEST_CASE("every seed pair on every catalog category") {
  struct Case {
    std::string name;
    std::vector<long> D;
    int n, q;
  };
  std::vector<Case> cases{{"vec_zn", {1, 1, 1}, 3, 1}, {"svec", {1, 1}, 2, 0}, {"fibonacci", {1, 2}, 2, 0},
                          {"ising", {1, 2, 1}, 2, 0}};
  std::vector<FunctorStrategy> seeds{FunctorStrategy::canonical(), FunctorStrategy::with_seed(3),
                                     FunctorStrategy::with_seed(7), FunctorStrategy::with_seed(11)};
  for (const auto& c : cases) {
    Fixture fx(c.name, c.D, c.n, c.q);
    std::vector<WQHopf> hs;
    for (const auto& s : seeds) hs.push_back(fx.hopf(s));
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = 0; j < hs.size(); ++j) {
        CAPTURE(c.name);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(verify_twist(hs[i], hs[j], twist_between(hs[i], hs[j])).ok());
      }
  }
}
