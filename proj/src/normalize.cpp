#include "mcdm/normalize.hpp"

#include <cmath>

#include <fmt/format.h>

namespace mcdm {

namespace {

void require_nonnegative(const DecisionMatrix& matrix) {
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (matrix.at(i, j) < 0.0) {
        throw DataError(fmt::format(
            "negative value {} at cell ({},{}) of criterion '{}'; normalization requires "
            "nonnegative data",
            matrix.at(i, j), i + 1, j + 1, matrix.criteria()[j].name));
      }
    }
  }
}

}  // namespace

NormalizedMatrix vector_normalize(const DecisionMatrix& matrix) {
  require_valid(matrix);
  require_nonnegative(matrix);
  const std::size_t m = matrix.rows();
  const std::size_t n = matrix.cols();

  NormalizedMatrix out{std::vector<std::vector<double>>(m, std::vector<double>(n)),
                       NormalizationScheme::Vector};
  for (std::size_t j = 0; j < n; ++j) {
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum_sq += matrix.at(i, j) * matrix.at(i, j);
    if (sum_sq == 0.0) {
      throw DataError(
          fmt::format("criterion '{}' is an all-zero column", matrix.criteria()[j].name));
    }
    const double norm = std::sqrt(sum_sq);
    for (std::size_t i = 0; i < m; ++i) out.values[i][j] = matrix.at(i, j) / norm;
  }
  return out;
}

NormalizedMatrix sum_normalize(const DecisionMatrix& matrix) {
  require_valid(matrix);
  require_nonnegative(matrix);
  const std::size_t m = matrix.rows();
  const std::size_t n = matrix.cols();

  NormalizedMatrix out{std::vector<std::vector<double>>(m, std::vector<double>(n)),
                       NormalizationScheme::Sum};
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += matrix.at(i, j);
    if (!(sum > 0.0)) {
      throw DataError(fmt::format("criterion '{}' has non-positive column sum {}",
                                  matrix.criteria()[j].name, sum));
    }
    for (std::size_t i = 0; i < m; ++i) out.values[i][j] = matrix.at(i, j) / sum;
  }
  return out;
}

WeightedMatrix apply_weights(const NormalizedMatrix& normalized,
                             std::span<const Criterion> criteria) {
  WeightedMatrix out{normalized.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    auto& row = out.values[i];
    if (row.size() != criteria.size()) {
      throw ConfigError(fmt::format("dimension mismatch: row {} has {} columns, {} criteria given",
                                    i + 1, row.size(), criteria.size()));
    }
    for (std::size_t j = 0; j < row.size(); ++j) row[j] *= criteria[j].weight;
  }
  return out;
}

}  // namespace mcdm
