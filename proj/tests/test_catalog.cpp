#include <doctest.h>

#include "wqh/catalog.hpp"

using namespace wqh;

TEST_CASE("all builtins certify") {
  for (int n : {2, 3}) {
    for (int q : {0, 1}) {
      auto e = builtin("vec_zn", n, q);
      CHECK(e.certificate.ok());
    }
  }
  for (std::string name : {"svec", "fibonacci", "ising"}) {
    CAPTURE(name);
    auto e = builtin(name);
    CHECK(e.certificate.ok());
    auto d = dimensions(e.data);
    CHECK(d == e.expected_dimensions);
  }
  CHECK_THROWS_AS(builtin("nope"), InputError);
}

TEST_CASE("vec_zn with nontrivial q has non-identity associators") {
  auto e = builtin("vec_zn", 3, 1);
  bool nontrivial = false;
  for (const auto& [k, m] : e.data.F)
    if (!m.is_identity()) nontrivial = true;
  CHECK(nontrivial);
}

TEST_CASE("quantum dimensions satisfy their minimal polynomials") {
  Scalar t = dimension(fibonacci_data(), 1);
  CHECK(t * t == t + Scalar(1));
  Scalar s = dimension(ising_data(), 1);
  CHECK(s * s == Scalar(2));
}

namespace {

// Every stored non-unit F or R entry and every nontrivial theta, multiplied by 2, must break a verifier.
void perturbation_sweep(const CategoryData& base) {
  for (const auto& [key, m] : base.F) {
    if (key[0] == 0 || key[1] == 0 || key[2] == 0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        CategoryData c = base;
        c.F[key](i, j) = m(i, j).is_zero() ? Scalar(1) : m(i, j) * Scalar(2);
        CAPTURE(key[0]);
        CAPTURE(key[1]);
        CAPTURE(key[2]);
        CAPTURE(key[3]);
        CHECK_FALSE(certify(c).ok());
      }
  }
  for (const auto& [key, m] : base.R) {
    if (key[0] == 0 || key[1] == 0) continue;
    CategoryData c = base;
    c.R[key](0, 0) = m(0, 0) * Scalar(2);
    CHECK_FALSE(certify(c).ok());
  }
  for (int a = 1; a < base.rank(); ++a) {
    CategoryData c = base;
    c.theta[a] = c.theta[a] * Scalar(2);
    CHECK_FALSE(certify(c).ok());
  }
}

}  // namespace

TEST_CASE("single-entry perturbations fail") {
  perturbation_sweep(fibonacci_data());
  perturbation_sweep(ising_data());
}
