#pragma once

// Near-coincidence search for projective points: the gap of a pair is
// 1 - |<x_i, x_k>|, which is zero exactly when x_k = x_i alpha.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "projcub/field.hpp"

namespace projcub {

struct GapSearchResult {
  /// Smallest gap found, or a certified lower bound when !exact.
  double min_gap = 1.0;
  bool exact = true;
  std::size_t pairs_examined = 0;
};

/// 1 - |<x, y>| for unit vectors on m packed entries.
double projective_gap(Field field, std::size_t m, const double* x, const double* y) noexcept;

/// Minimum pairwise gap of the unit nodes (node-major, delta*m reals each).
/// Brute force for small sets, otherwise a staged grid search over projective
/// invariants with a bounded pair budget.
GapSearchResult min_projective_gap(Field field, std::size_t m, std::span<const double> nodes);

/// Every pair (i < k) with gap < threshold. Throws InvalidArgument when
/// threshold is so large that the grid cannot prune (>= 1e-2).
std::vector<std::pair<std::size_t, std::size_t>> close_pairs(Field field, std::size_t m,
                                                             std::span<const double> nodes,
                                                             double threshold);

}  // namespace projcub
