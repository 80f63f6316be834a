#include <doctest.h>

#include <algorithm>

#include "wqh/catalog.hpp"
#include "wqh/solver.hpp"

using namespace wqh;

namespace {

SolverOptions field(long n) {
  SolverOptions o;
  o.conductor = n;
  return o;
}

Scalar r_symbol(const CategoryData& c, int a, int b, int x) { return c.R.at({a, b, x})(0, 0); }

// Every (F, R) pair the solver produces, with both layers re-verified.
std::vector<CategoryData> braided_solutions(const FusionRing& ring, long n) {
  std::vector<CategoryData> out;
  for (const auto& cat : solve_pentagon_small(ring, field(n)).solutions) {
    CHECK(verify_pentagon(cat).ok());
    for (auto& b : solve_hexagon_small(cat, field(n)).solutions) {
      CHECK(verify_hexagons(b).ok());
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rank one ring has only the trivial category") {
  auto ring = builtin("vec_zn", 1, 0).data.ring;
  auto res = solve_pentagon_small(ring);
  CHECK(res.unknowns == 0);
  REQUIRE(res.solutions.size() == 1);
  CHECK(solve_hexagon_small(res.solutions[0]).solutions.size() == 1);
}

TEST_CASE("Z/2 has the two associator classes") {
  auto res = solve_pentagon_small(builtin("vec_zn", 2, 0).data.ring, field(4));
  REQUIRE(res.solutions.size() == 2);
  std::vector<Scalar> signs;
  for (const auto& c : res.solutions) signs.push_back(c.fmatrix(1, 1, 1, 1)(0, 0));
  std::sort(signs.begin(), signs.end(), lex_less);
  CHECK(signs == std::vector<Scalar>{Scalar(-1), Scalar(1)});
}

TEST_CASE("hexagons over trivial Z/2 associator give R = +-1") {
  auto base = builtin("vec_zn", 2, 0).data;
  auto res = solve_hexagon_small(base, field(4));
  REQUIRE(res.solutions.size() == 2);
  for (const auto& c : res.solutions) {
    Scalar r = r_symbol(c, 1, 1, 0);
    CHECK((r == Scalar(1) || r == Scalar(-1)));
  }
}

TEST_CASE("hexagons over the sign associator give R = +-i") {
  auto base = builtin("vec_zn", 2, 1).data;
  auto res = solve_hexagon_small(base, field(4));
  REQUIRE(res.solutions.size() == 2);
  for (const auto& c : res.solutions) {
    Scalar r = r_symbol(c, 1, 1, 0);
    CHECK(r * r == Scalar(-1));
  }
}

TEST_CASE("Fibonacci F-symbol solves x^2 + x - 1 = 0") {
  auto res = solve_pentagon_small(builtin("fibonacci").data.ring, field(5));
  REQUIRE(res.solutions.size() == 2);
  CHECK(res.gauge_fixed == 1);
  Scalar inv_phi = golden_ratio().inverse();
  bool found = false;
  for (const auto& c : res.solutions) {
    Scalar x = c.fmatrix(1, 1, 1, 1)(0, 0);
    CHECK(x * x + x == Scalar(1));
    if (x == inv_phi) found = true;
  }
  CHECK(found);
}

TEST_CASE("Fibonacci braidings reproduce the catalog invariants") {
  auto ref = fibonacci_data();
  auto sols = braided_solutions(ref.ring, 5);
  CHECK(sols.size() == 4);
  bool matched = false;
  for (const auto& c : sols) {
    if (c.fmatrix(1, 1, 1, 1) != ref.fmatrix(1, 1, 1, 1)) continue;
    if (r_symbol(c, 1, 1, 0) == r_symbol(ref, 1, 1, 0) && r_symbol(c, 1, 1, 1) == r_symbol(ref, 1, 1, 1) &&
        c.theta == ref.theta)
      matched = true;
  }
  CHECK(matched);
}

TEST_CASE("Ising braidings reproduce the catalog invariants") {
  auto ref = ising_data();
  auto sols = braided_solutions(ref.ring, 16);
  CHECK(sols.size() == 8);
  bool matched = false;
  for (const auto& c : sols) {
    CHECK(c.fmatrix(1, 1, 1, 1)(0, 0) * c.fmatrix(1, 1, 1, 1)(0, 0) == Scalar(1) / Scalar(2));
    if (c.fmatrix(1, 1, 1, 1)(0, 0) != ref.fmatrix(1, 1, 1, 1)(0, 0)) continue;
    // R^{aa}_c and the psi-sigma monodromy are gauge invariant.
    bool same = r_symbol(c, 1, 1, 0) == r_symbol(ref, 1, 1, 0) && r_symbol(c, 1, 1, 2) == r_symbol(ref, 1, 1, 2) &&
                r_symbol(c, 2, 2, 0) == r_symbol(ref, 2, 2, 0) &&
                r_symbol(c, 1, 2, 1) * r_symbol(c, 2, 1, 1) == r_symbol(ref, 1, 2, 1) * r_symbol(ref, 2, 1, 1);
    if (same) matched = true;
  }
  CHECK(matched);
}

TEST_CASE("solutions outside the designated field are not reported") {
  // Over Q the Fibonacci pentagon has no solution.
  CHECK(solve_pentagon_small(builtin("fibonacci").data.ring, field(1)).solutions.empty());
}

TEST_CASE("out-of-scope inputs are rejected") {
  auto ring = builtin("vec_zn", 4, 0).data.ring;
  CHECK_THROWS_AS(solve_pentagon_small(ring), InputError);
  SolverOptions tight;
  tight.conductor = 16;
  tight.max_unknowns = 4;
  CHECK_THROWS_AS(solve_pentagon_small(ising_data().ring, tight), InputError);
}
