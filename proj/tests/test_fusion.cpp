#include <functional>
#include <doctest.h>

#include <random>

#include "wqh/fusion.hpp"

using namespace wqh;

TEST_CASE("fusion ring verification") {
  CHECK(verify_fusion_ring(zn_ring(2)).ok());
  CHECK(verify_fusion_ring(fibonacci_ring()).ok());
  CHECK(verify_fusion_ring(ising_ring()).ok());
  FusionRing bad = fibonacci_ring();
  bad.set_N(1, 1, 0, 0);
  Report rep = verify_fusion_ring(bad);
  CHECK_FALSE(rep.ok());
  const Check* d = rep.find("duality");
  REQUIRE(d);
  CHECK_FALSE(d->pass);
  REQUIRE(d->witness_indices.size() == 1);
  CHECK(d->witness_indices[0] == std::vector<long>{1, 1, 0});
}

TEST_CASE("canonical weak dimension") {
  CHECK(canonical_weak_dimension(fibonacci_ring()).values == std::vector<long>{1, 3});
  CHECK(canonical_weak_dimension(ising_ring()).values == std::vector<long>{1, 4, 3});
  // On Z/n each row of N has exactly n nonzero entries, so the sum gives n (exact only for n = 1).
  for (int n = 1; n <= 6; ++n) {
    auto d = canonical_weak_dimension(zn_ring(n));
    std::vector<long> want(n, n);
    want[0] = 1;
    CHECK(d.values == want);
    CHECK(d.exact == (n == 1));
  }
}

TEST_CASE("max weak dimension") {
  CHECK(max_weak_dimension(fibonacci_ring()).values[1] == 2);
  CHECK(max_weak_dimension(zn_ring(2)).values[1] == 1);
  CHECK(max_weak_dimension(ising_ring()).values[1] == 2);
}

TEST_CASE("is_weak_dimension_function") {
  bool exact = true;
  Report r1 = is_weak_dimension_function(fibonacci_ring(), {1, 1}, &exact);
  CHECK_FALSE(r1.ok());
  CHECK(r1.find("weak_inequality")->witness_indices[0] == std::vector<long>{1, 1});
  Report r2 = is_weak_dimension_function(fibonacci_ring(), {1, 2}, &exact);
  CHECK(r2.ok());
  CHECK_FALSE(exact);
  Report r3 = is_weak_dimension_function(zn_ring(3), {1, 1, 1}, &exact);
  CHECK(r3.ok());
  CHECK(exact);
  CHECK_FALSE(is_weak_dimension_function(zn_ring(3), {1, 1, 2}).ok());
}

TEST_CASE("minimizer") {
  auto f = minimize_dimension_function(fibonacci_ring(), 4);
  CHECK(f.values == std::vector<long>{1, 2});
  CHECK(f.objective() == 5);
  auto i = minimize_dimension_function(ising_ring(), 4);
  CHECK(i.values == std::vector<long>{1, 2, 1});
  CHECK(i.objective() == 6);
  auto z = minimize_dimension_function(zn_ring(5), 2);
  CHECK(z.values == std::vector<long>(5, 1));
  CHECK(z.exact);
  CHECK_THROWS_AS(minimize_dimension_function(fibonacci_ring(), 1), MathError);
}

TEST_CASE("minimizer is optimal by independent enumeration") {
  // Enumerate every vector with D(1)=1 and all other values in 1..4, no duality pruning.
  for (const auto& ring : {fibonacci_ring(), ising_ring(), zn_ring(3), zn_ring(4)}) {
    auto best = minimize_dimension_function(ring, 4);
    const int r = ring.rank();
    std::vector<long> v(r, 1);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == r) {
        if (is_weak_dimension_function(ring, v).ok()) {
          long obj = 0;
          for (long x : v) obj += x * x;
          CHECK(obj >= best.objective());
          if (obj == best.objective()) CHECK_FALSE(v < best.values);
        }
        return;
      }
      for (long x = 1; x <= 4; ++x) {
        v[pos] = x;
        rec(pos + 1);
      }
    };
    rec(1);
  }
}

TEST_CASE("pointed rings: minimal is the exact constant function") {
  for (int n = 1; n <= 5; ++n) {
    auto m = minimize_dimension_function(zn_ring(n), 3);
    CHECK(m.values == std::vector<long>(n, 1));
    CHECK(m.exact);
    CHECK(is_weak_dimension_function(zn_ring(n), canonical_weak_dimension(zn_ring(n)).values).ok());
  }
}
