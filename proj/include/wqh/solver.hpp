#pragma once

#include <string>
#include <vector>

#include "wqh/category.hpp"

namespace wqh {

/// Brute-force solvers for the Moore-Seiberg equations of tiny multiplicity-free
/// rings. The equations are assembled here from F- and R-symbols directly and
/// share no code with the matrix-based verifiers.
struct SolverOptions {
  /// Designated field Q(zeta_n) for exact back-substitution.
  long conductor = 1;
  /// Limit on unknowns left after unit pinning and gauge fixing.
  int max_unknowns = 12;
};

struct SolverResult {
  std::vector<CategoryData> solutions;
  int unknowns = 0;       // after gauge fixing
  int gauge_fixed = 0;    // entries normalized to 1
  std::vector<std::string> notes;
};

/// Pentagon solutions with unit F pinned to the identity and one entry per
/// independent gauge direction normalized to 1 (1x1 blocks first, then the
/// remaining entries in label order; normalized entries are assumed nonzero).
/// Solutions have no R data. Throws InputError for rank > 3, multiplicities,
/// or too many unknowns.
SolverResult solve_pentagon_small(const FusionRing& ring, const SolverOptions& opt = {});

/// R-symbols solving both hexagons for the given F. Each solution is re-verified
/// with verify_hexagons; theta is filled when a ribbon structure exists among
/// the 4n-th roots of unity.
SolverResult solve_hexagon_small(const CategoryData& cat_with_F, const SolverOptions& opt = {});

}  // namespace wqh
