#pragma once

#include <span>
#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

enum class NormalizationScheme { Vector, Sum };

struct NormalizedMatrix {
  std::vector<std::vector<double>> values;
  NormalizationScheme scheme = NormalizationScheme::Vector;
};

struct WeightedMatrix {
  std::vector<std::vector<double>> values;
};

// n_ij = x_ij / sqrt(sum_i x_ij^2). Columns come out with unit Euclidean norm.
// Rejects negative cells and all-zero columns with a DataError naming the
// criterion.
NormalizedMatrix vector_normalize(const DecisionMatrix& matrix);

// n_ij = x_ij / sum_i x_ij. Columns come out summing to one.
NormalizedMatrix sum_normalize(const DecisionMatrix& matrix);

// Cellwise w_j * n_ij.
WeightedMatrix apply_weights(const NormalizedMatrix& normalized,
                             std::span<const Criterion> criteria);

}  // namespace mcdm
