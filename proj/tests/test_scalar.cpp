#include <doctest.h>

#include <random>
#include <stdexcept>

#include "wqh/scalar.hpp"

using wqh::make_scalar;
using wqh::Rational;
using wqh::Scalar;

namespace {

Scalar golden() {
  // (1 + sqrt5)/2 with sqrt5 = z + z^4 - z^2 - z^3 over Q(zeta_5)
  Scalar z = Scalar::root_of_unity(5, 1);
  Scalar s5 = z + z * z * z * z - z * z - z * z * z;
  return (Scalar(1) + s5) / Scalar(2);
}

Scalar random_scalar(std::mt19937& rng) {
  static const long conductors[] = {1, 3, 4, 5, 7, 8, 9, 12, 15, 16};
  long n = conductors[rng() % 10];
  std::vector<Rational> c(wqh::euler_phi(n));
  for (auto& q : c) q = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
  return make_scalar(n, c);
}

}  // namespace

TEST_CASE("make_scalar basics") {
  CHECK(make_scalar(1, {Rational(1)}).is_one());
  Scalar i = make_scalar(4, {Rational(0), Rational(1)});
  CHECK(i * i == make_scalar(1, {Rational(-1)}));
  CHECK((i * i).conductor() == 1);
  CHECK_THROWS_AS(make_scalar(0, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("golden ratio in Q(zeta_5)") {
  Scalar x = golden();
  CHECK(x * x == x + Scalar(1));
  CHECK(x.conductor() == 5);
  CHECK(std::abs(x.to_complex().real() - 1.6180339887498949) < 1e-12);
}

TEST_CASE("scalars_equal") {
  CHECK(wqh::scalars_equal(Scalar(1), Scalar(1), 0));
  Scalar z = Scalar::root_of_unity(3, 1);
  CHECK(wqh::scalars_equal(z + z * z, Scalar(-1), 0));
  CHECK(wqh::scalars_equal(Scalar::approx(1.0), Scalar::approx(1.0 + 1e-12), 1e-9));
  CHECK_FALSE(wqh::scalars_equal(Scalar::approx(1.0), Scalar::approx(1.1), 1e-9));
  CHECK_THROWS_AS(wqh::scalars_equal(Scalar(1), Scalar::approx(1.0), 1e-9), std::invalid_argument);
}

TEST_CASE("conductor folding and mixed conductors") {
  // zeta_6 = -zeta_3^2
  Scalar z6 = Scalar::root_of_unity(6, 1);
  CHECK(z6.conductor() == 3);
  CHECK(z6 == -Scalar::root_of_unity(3, 2));
  // zeta_8^2 = i
  Scalar z8 = Scalar::root_of_unity(8, 1);
  CHECK(z8 * z8 == Scalar::root_of_unity(4, 1));
  CHECK((z8 * z8).conductor() == 4);
  // sqrt2 = z8 + z8^7, squared is rational
  Scalar s2 = z8 + Scalar::root_of_unity(8, 7);
  CHECK((s2 * s2) == Scalar(2));
  // a value lifted to Q(zeta_15) from Q(zeta_3) equals its original
  Scalar z3 = Scalar::root_of_unity(3, 1);
  Scalar z5 = Scalar::root_of_unity(5, 1);
  Scalar mixed = z3 + z5 - z5;
  CHECK(mixed == z3);
  CHECK(mixed.minimal_field().conductor() == 3);
}

TEST_CASE("conj and galois") {
  Scalar z = Scalar::root_of_unity(16, 3);
  CHECK(z * z.conj() == Scalar(1));
  CHECK(z.galois(3) == Scalar::root_of_unity(16, 9));
  Scalar x = golden();
  CHECK(x.conj() == x);
}

TEST_CASE("inverse of zero throws") { CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error); }

TEST_CASE("field axioms on random exact scalars") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 1000; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("lift then reduce is identity") {
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    Scalar a = random_scalar(rng);
    long n = a.conductor() * 3;
    Scalar lifted = make_scalar(n, a.coefficients_in(n));
    CHECK(lifted == a);
    CHECK(lifted.minimal_field().coeffs() == a.minimal_field().coeffs());
    CHECK(lifted.minimal_field().conductor() == a.minimal_field().conductor());
  }
}
