#pragma once

#include <cstddef>

#include "mcdm/core.hpp"

namespace mcdm {

struct ComparisonReport {
  double spearman_naive = 0.0;
  double spearman_tie_adjusted = 0.0;
  std::size_t exact_matches = 0;
  double sum_sq_diff = 0.0;
  double max_abs_diff = 0.0;
};

/// 1 - 6 sum(D_i^2) / (m (m^2 - 1)) with D_i = a_i - b_i, no tie correction.
/// Leaves [-1, 1] when either input carries ties.
double spearman_naive(const RankVector& a, const RankVector& b);

/// Pearson correlation of the two rank vectors. Throws DataError when either
/// vector is constant.
double spearman_tie_adjusted(const RankVector& a, const RankVector& b);

// Length mismatch or m < 2 throws DataError. A constant input leaves
// spearman_tie_adjusted as NaN instead of throwing.
ComparisonReport agreement(const RankVector& a, const RankVector& b);

}  // namespace mcdm
