#include "mcdm/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace mcdm {

std::string_view to_string(Direction direction) {
  return direction == Direction::Benefit ? "benefit" : "cost";
}

std::string_view to_string(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::Competition:
      return "competition";
    case TiePolicy::Ordinal:
      return "ordinal";
    case TiePolicy::Average:
      return "average";
  }
  return "competition";
}

Direction parse_direction(std::string_view token) {
  const std::string name = trim_name(token);
  if (name == "benefit") return Direction::Benefit;
  if (name == "cost") return Direction::Cost;
  throw ConfigError(fmt::format("unknown direction '{}' (expected benefit|cost)", name));
}

TiePolicy parse_tie_policy(std::string_view token) {
  const std::string name = trim_name(token);
  if (name == "competition") return TiePolicy::Competition;
  if (name == "ordinal") return TiePolicy::Ordinal;
  if (name == "average") return TiePolicy::Average;
  throw ConfigError(
      fmt::format("unknown tie policy '{}' (expected competition|ordinal|average)", name));
}

std::string trim_name(std::string_view name) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto first = name.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = name.find_last_not_of(kSpace);
  return std::string(name.substr(first, last - first + 1));
}

DecisionMatrix::DecisionMatrix(std::vector<std::string> alternatives,
                               std::vector<Criterion> criteria,
                               std::vector<std::vector<double>> values)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      values_(std::move(values)) {
  for (auto& name : alternatives_) name = trim_name(name);
  for (auto& criterion : criteria_) criterion.name = trim_name(criterion.name);
}

std::vector<double> DecisionMatrix::column(std::size_t col) const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& row : values_) out.push_back(row[col]);
  return out;
}

DecisionMatrix DecisionMatrix::with_criteria(std::vector<Criterion> criteria) const {
  if (criteria.size() != criteria_.size()) {
    throw ConfigError(fmt::format("criterion count mismatch: matrix has {}, got {}",
                                  criteria_.size(), criteria.size()));
  }
  return DecisionMatrix(alternatives_, std::move(criteria), values_);
}

DecisionMatrix DecisionMatrix::with_directions(std::span<const Direction> directions) const {
  if (directions.size() != criteria_.size()) {
    throw ConfigError(fmt::format("direction count mismatch: matrix has {} criteria, got {}",
                                  criteria_.size(), directions.size()));
  }
  auto criteria = criteria_;
  for (std::size_t j = 0; j < criteria.size(); ++j) criteria[j].direction = directions[j];
  return DecisionMatrix(alternatives_, std::move(criteria), values_);
}

DecisionMatrix DecisionMatrix::with_weights(std::span<const double> weights) const {
  if (weights.size() != criteria_.size()) {
    throw ConfigError(fmt::format("weight count mismatch: matrix has {} criteria, got {}",
                                  criteria_.size(), weights.size()));
  }
  auto criteria = criteria_;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    if (!(weights[j] > 0.0) || !std::isfinite(weights[j])) {
      throw ConfigError(fmt::format("weight {} for criterion '{}' must be positive",
                                    weights[j], criteria[j].name));
    }
    criteria[j].weight = weights[j];
  }
  return DecisionMatrix(alternatives_, std::move(criteria), values_);
}

DecisionMatrix DecisionMatrix::with_uniform_direction(Direction direction) const {
  std::vector<Direction> directions(criteria_.size(), direction);
  return with_directions(directions);
}

std::vector<Criterion> default_criteria(std::size_t count) {
  std::vector<Criterion> criteria;
  criteria.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    criteria.push_back({fmt::format("C{}", j + 1), Direction::Cost,
                        1.0 / static_cast<double>(count)});
  }
  return criteria;
}

ValidationReport validate(const DecisionMatrix& matrix) {
  ValidationReport report;
  auto& out = report.violations;
  const std::size_t m = matrix.rows();
  const std::size_t n = matrix.cols();

  if (m < 2) out.push_back(fmt::format("m >= 2 required (got {} alternatives)", m));
  if (n < 1) out.push_back("n >= 1 required (got 0 criteria)");

  std::set<std::string> seen;
  for (const auto& name : matrix.alternatives()) {
    if (name.empty()) out.push_back("empty alternative name");
    if (!seen.insert(name).second) out.push_back(fmt::format("duplicate alternative '{}'", name));
  }
  seen.clear();
  for (const auto& criterion : matrix.criteria()) {
    if (criterion.name.empty()) out.push_back("empty criterion name");
    if (!seen.insert(criterion.name).second) {
      out.push_back(fmt::format("duplicate criterion '{}'", criterion.name));
    }
    if (!(criterion.weight > 0.0) || !std::isfinite(criterion.weight)) {
      out.push_back(fmt::format("criterion '{}' has non-positive weight {}", criterion.name,
                                criterion.weight));
    }
  }

  const auto& values = matrix.values();
  if (values.size() != m) {
    out.push_back(fmt::format("row count {} does not match {} alternative names", values.size(), m));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != n) {
      out.push_back(fmt::format("row {} has {} values, expected {}", i + 1, values[i].size(), n));
    }
    for (std::size_t j = 0; j < values[i].size(); ++j) {
      const double v = values[i][j];
      // Cells are reported 1-based as (row,col).
      if (!std::isfinite(v)) {
        out.push_back(fmt::format("non-finite value at cell ({},{})", i + 1, j + 1));
      } else if (v <= 0.0) {
        report.warnings.push_back(fmt::format("non-positive value {} at cell ({},{})", v, i + 1,
                                              j + 1));
      }
    }
  }
  return report;
}

void require_valid(const DecisionMatrix& matrix) {
  const auto report = validate(matrix);
  if (report.ok()) return;
  std::string message = "invalid decision matrix:";
  for (const auto& v : report.violations) message += "\n  " + v;
  throw DataError(message);
}

namespace {

bool tied(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-12 * scale;
}

}  // namespace

RankVector rank_scores(std::span<const double> scores, RankOrder order, TiePolicy policy) {
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw DataError(fmt::format("non-finite score at index {}", i));
    }
  }
  const std::size_t m = scores.size();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order == RankOrder::Ascending ? scores[a] < scores[b] : scores[a] > scores[b];
  });

  RankVector out{std::vector<double>(m, 0.0)};
  std::size_t start = 0;
  while (start < m) {
    // Group is anchored on its first element so the tolerance is not chained.
    std::size_t end = start + 1;
    while (end < m && tied(scores[idx[start]], scores[idx[end]])) ++end;
    // Within the group, stable_sort kept input order except where the tolerance
    // merged values that compared unequal; restore input order for Ordinal.
    std::sort(idx.begin() + static_cast<std::ptrdiff_t>(start),
              idx.begin() + static_cast<std::ptrdiff_t>(end));
    for (std::size_t k = start; k < end; ++k) {
      double rank = 0.0;
      switch (policy) {
        case TiePolicy::Competition:
          rank = static_cast<double>(start + 1);
          break;
        case TiePolicy::Ordinal:
          rank = static_cast<double>(k + 1);
          break;
        case TiePolicy::Average:
          rank = static_cast<double>(start + 1 + end) / 2.0;
          break;
      }
      out.ranks[idx[k]] = rank;
    }
    start = end;
  }
  return out;
}

std::vector<RankVector> column_ranks(const DecisionMatrix& matrix, TiePolicy policy) {
  require_valid(matrix);
  std::vector<RankVector> out;
  out.reserve(matrix.cols());
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    const auto values = matrix.column(j);
    const auto order = matrix.criteria()[j].direction == Direction::Benefit
                           ? RankOrder::Descending
                           : RankOrder::Ascending;
    out.push_back(rank_scores(values, order, policy));
  }
  return out;
}

std::string format_rank(double rank) {
  if (rank == std::floor(rank) && std::fabs(rank) < 1e15) {
    return fmt::format("{}", static_cast<long long>(rank));
  }
  return fmt::format("{}", rank);
}

}  // namespace mcdm
