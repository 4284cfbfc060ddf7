#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcdm {

// Malformed or invalid input data (CLI exit status 1).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent analysis configuration (CLI exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction { Benefit, Cost };

enum class TiePolicy { Competition, Ordinal, Average };

enum class RankOrder { Ascending, Descending };

std::string_view to_string(Direction direction);
std::string_view to_string(TiePolicy policy);
Direction parse_direction(std::string_view token);
TiePolicy parse_tie_policy(std::string_view token);

struct Criterion {
  std::string name;
  Direction direction = Direction::Cost;
  double weight = 1.0;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

// Trims surrounding whitespace; names are otherwise compared verbatim.
std::string trim_name(std::string_view name);

/// An m x n table of raw criterion values for a set of named alternatives.
///
/// The constructor stores whatever it is given; use validate() or
/// require_valid() to check the invariants (m >= 2, n >= 1, unique names,
/// consistent shape, finite values, positive weights).
class DecisionMatrix {
 public:
  DecisionMatrix() = default;
  DecisionMatrix(std::vector<std::string> alternatives,
                 std::vector<Criterion> criteria,
                 std::vector<std::vector<double>> values);

  std::size_t rows() const { return alternatives_.size(); }
  std::size_t cols() const { return criteria_.size(); }

  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const std::vector<Criterion>& criteria() const { return criteria_; }
  const std::vector<std::vector<double>>& values() const { return values_; }

  double at(std::size_t row, std::size_t col) const { return values_[row][col]; }
  std::vector<double> column(std::size_t col) const;

  // Same data under a different analysis policy (directions and weights).
  DecisionMatrix with_criteria(std::vector<Criterion> criteria) const;
  DecisionMatrix with_directions(std::span<const Direction> directions) const;
  DecisionMatrix with_weights(std::span<const double> weights) const;
  DecisionMatrix with_uniform_direction(Direction direction) const;

  friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<Criterion> criteria_;
  std::vector<std::vector<double>> values_;
};

// Criteria named C1..Cn, all Cost, equal weights 1/n.
std::vector<Criterion> default_criteria(std::size_t count);

struct ValidationReport {
  std::vector<std::string> violations;
  // Non-positive cells; fatal only for the normalization-based methods.
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const DecisionMatrix& matrix);

// Throws DataError listing every violation.
void require_valid(const DecisionMatrix& matrix);

/// Ranks aligned to alternative order. Stored as reals so Average ties can
/// carry exact halves; Competition and Ordinal ranks are always integral.
struct RankVector {
  std::vector<double> ranks;

  std::size_t size() const { return ranks.size(); }
  double operator[](std::size_t i) const { return ranks[i]; }

  friend bool operator==(const RankVector&, const RankVector&) = default;
};

// Rank 1 goes to the best score under `order`. Scores within a relative
// 1e-12 of each other are treated as tied.
RankVector rank_scores(std::span<const double> scores, RankOrder order,
                       TiePolicy policy = TiePolicy::Competition);

// Per-criterion ranks r_ij (rank 1 = best value under the column direction).
std::vector<RankVector> column_ranks(const DecisionMatrix& matrix,
                                     TiePolicy policy = TiePolicy::Competition);

// "3" for integral ranks, "1.5" otherwise.
std::string format_rank(double rank);

}  // namespace mcdm
