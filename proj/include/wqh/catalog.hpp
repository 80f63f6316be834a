#pragma once

#include <string>
#include <vector>

#include "wqh/category.hpp"

namespace wqh {

struct CatalogEntry {
  std::string name;
  CategoryData data;
  std::string provenance;
  std::vector<Scalar> expected_dimensions;
  std::vector<Scalar> expected_twists;
  Report certificate;
};

/// Pointed Z/n. Even n: associator (-1)^{q a [b+c >= n]}, braiding exp(pi i q a b / n).
/// Odd n: braiding zeta_n^{q a b (n+1)/2} with the +-1 associator of a symmetric gauge.
CategoryData vec_zn_data(int n, int q);
CategoryData svec_data();
CategoryData fibonacci_data();
CategoryData ising_data();

/// Twist values among the order-th roots of unity satisfying the ribbon relations.
/// Throws MathError if there are none.
std::vector<Scalar> ribbon_twists(const CategoryData& cat, long order);

/// golden ratio (1 + sqrt 5)/2 as an element of Q(zeta_5).
Scalar golden_ratio();
/// sqrt 2 = zeta_8 + zeta_8^-1.
Scalar sqrt2();

/// Fusion ring, pentagon, hexagons, snakes and ribbon checks.
Report certify(const CategoryData& cat, const Tolerance& tol = {});

/// One of vec_zn, svec, fibonacci, ising; n and q are used by vec_zn only.
/// Throws InputError for unknown names and MathError when certification fails.
CatalogEntry builtin(const std::string& name, int n = 2, int q = 0);
std::vector<std::string> builtin_names();

}  // namespace wqh
