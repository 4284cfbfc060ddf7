#pragma once

#include <string>
#include <vector>

#include "mcdm/compare.hpp"
#include "mcdm/core.hpp"
#include "mcdm/methods.hpp"

namespace mcdm {

/// Published per-method scores and ranks for the 30-bank case study, plus the
/// CAMELS benchmark column and the published method-vs-CAMELS coefficients.
struct PublishedColumn {
  std::vector<double> scores;
  RankVector ranks;
  double coefficient_vs_camels = 0.0;
};

struct PublishedResults {
  std::vector<std::string> alternatives;
  PublishedColumn moora;
  PublishedColumn ram;
  PublishedColumn fuca;
  PublishedColumn curli;
  RankVector camels;
  // Figure given for MOORA/RAM in the published summary; not reproducible.
  double summary_coefficient = 0.0;

  const PublishedColumn& column(Method method) const;
};

const PublishedResults& published_results();

/// Criterion direction that reproduces the published column for `method`:
/// Benefit for MOORA, RAM and CURLI; Cost for FUCA. Weights stay equal.
Direction replication_direction(Method method);

/// Tolerances the replication is held to.
struct ReplicationTolerances {
  double moora_score = 2e-4;
  double ram_score = 3e-4;
  // FUCA scores must agree after rounding to 4 decimals; CURLI exactly.
  double coefficient = 1e-4;
  double moora_ram_sum_sq_diff = 9109.0;
};

struct MethodReplication {
  Method method = Method::Moora;
  Direction direction = Direction::Benefit;
  MethodResult result;
  double max_score_deviation = 0.0;
  std::size_t rank_matches = 0;
  // Engine ranks vs CAMELS, and published ranks vs CAMELS.
  ComparisonReport engine_vs_camels;
  ComparisonReport published_vs_camels;
};

struct Discrepancy {
  std::string cell;  // e.g. "FUCA rank [VIETBANK]"
  std::string description;
};

struct ReplicationReport {
  std::vector<std::string> alternatives;
  std::vector<MethodReplication> methods;  // MOORA, RAM, FUCA, CURLI
  // Documented inconsistencies inside the published tables.
  std::vector<Discrepancy> discrepancies;
  // Tolerance checks that failed; empty means the replication holds.
  std::vector<std::string> drift;

  bool ok() const { return drift.empty(); }
  const MethodReplication& method(Method m) const;
};

/// Re-runs the four methods on the builtin bank matrix under the pinned
/// configurations (equal weights, Competition ties) and checks every
/// published score, rank and coefficient.
ReplicationReport replicate(const ReplicationTolerances& tolerances = {});

}  // namespace mcdm
