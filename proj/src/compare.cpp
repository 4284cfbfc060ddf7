#include "mcdm/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace mcdm {

namespace {

void require_comparable(const RankVector& a, const RankVector& b) {
  if (a.size() != b.size()) {
    throw DataError(fmt::format("rank vector length mismatch: {} vs {}", a.size(), b.size()));
  }
  if (a.size() < 2) {
    throw DataError(fmt::format("m >= 2 required for rank correlation (got {})", a.size()));
  }
}

double sum_sq_diff(const RankVector& a, const RankVector& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

}  // namespace

double spearman_naive(const RankVector& a, const RankVector& b) {
  require_comparable(a, b);
  const auto m = static_cast<double>(a.size());
  return 1.0 - 6.0 * sum_sq_diff(a, b) / (m * (m * m - 1.0));
}

double spearman_tie_adjusted(const RankVector& a, const RankVector& b) {
  require_comparable(a, b);
  const auto m = static_cast<double>(a.size());
  double mean_a = 0.0;
  double mean_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= m;
  mean_b /= m;

  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    throw DataError("rank correlation undefined for a constant rank vector");
  }
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

ComparisonReport agreement(const RankVector& a, const RankVector& b) {
  require_comparable(a, b);
  ComparisonReport report;
  report.spearman_naive = spearman_naive(a, b);
  try {
    report.spearman_tie_adjusted = spearman_tie_adjusted(a, b);
  } catch (const DataError&) {
    report.spearman_tie_adjusted = std::numeric_limits<double>::quiet_NaN();
  }
  report.sum_sq_diff = sum_sq_diff(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) ++report.exact_matches;
    report.max_abs_diff = std::max(report.max_abs_diff, std::fabs(a[i] - b[i]));
  }
  return report;
}

}  // namespace mcdm
