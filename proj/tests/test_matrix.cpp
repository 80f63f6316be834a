#include <doctest.h>

#include "wqh/matrix.hpp"

using wqh::Matrix;
using wqh::Scalar;

TEST_CASE("inverse and solve") {
  Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  auto inv = wqh::inverse(m);
  REQUIRE(inv);
  CHECK((m * *inv).is_identity());
  CHECK(!wqh::inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
  CHECK(wqh::rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("right inverse and null space") {
  Matrix c = Matrix::from_rows({{1, 0, 2, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
  auto r = wqh::right_inverse(c);
  REQUIRE(r);
  CHECK((c * *r).is_identity());
  Matrix ns = wqh::null_space(c);
  CHECK(ns.cols() == 1);
  CHECK((c * ns).is_zero());
}

TEST_CASE("kron and flip") {
  Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  Matrix b = Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}});
  Matrix p = wqh::flip(2, 3);
  CHECK(p * wqh::kron(a, b) * wqh::flip(3, 2) == wqh::kron(b, a));
  Matrix x = Matrix::from_rows({{Scalar::root_of_unity(5, 1), 1}, {0, 1}});
  CHECK(wqh::kron(x, Matrix::identity(2)) * wqh::kron(Matrix::identity(2), x) ==
        wqh::kron(x, x));
}
