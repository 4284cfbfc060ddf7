#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

enum class Method { Moora, Ram, Fuca, Curli };

inline constexpr std::array<Method, 4> kAllMethods{Method::Moora, Method::Ram, Method::Fuca,
                                                   Method::Curli};

std::string_view to_string(Method method);  // "MOORA", "RAM", ...
Method parse_method(std::string_view token);  // case-insensitive

// MOORA and RAM rank the largest score first; FUCA and CURLI the smallest.
RankOrder canonical_order(Method method);

struct MethodResult {
  Method method = Method::Moora;
  std::vector<double> scores;
  RankVector ranks;
};

struct MooraIntermediates {
  std::vector<double> benefit;  // P_i
  std::vector<double> cost;     // R_i
  std::vector<double> net;      // Q_i = P_i - R_i
};

struct RamIntermediates {
  std::vector<double> benefit_total;  // S+_i
  std::vector<double> cost_total;     // S-_i
  std::vector<double> index;          // RI_i
};

// P[i][j]: net pairwise score of alternative i under criterion j.
struct CurliScoreTable {
  std::vector<std::vector<int>> net;
};

/// MOORA ratio system over vector-normalized, weighted values.
///
/// The benefit and cost parts are averaged over the number of criteria in each
/// set; an empty set contributes zero.
MooraIntermediates moora_intermediates(const DecisionMatrix& matrix);
MethodResult moora(const DecisionMatrix& matrix, TiePolicy policy = TiePolicy::Competition);

// RI = (2 + S+)^(1 / (2 + S-)).
double ram_index(double benefit_total, double cost_total);
RamIntermediates ram_intermediates(const DecisionMatrix& matrix);
MethodResult ram(const DecisionMatrix& matrix, TiePolicy policy = TiePolicy::Competition);

/// Weighted rank sum: S_i = sum_j w_j * r_ij, with r_ij the per-criterion
/// rank under `policy`. Smallest S_i ranks first.
MethodResult fuca(const DecisionMatrix& matrix, TiePolicy policy = TiePolicy::Competition);

/// Pairwise +1/-1/0 comparison counts summed over criteria. Weights are not
/// used. Smallest total ranks first.
CurliScoreTable curli_scores(const DecisionMatrix& matrix);
MethodResult curli(const DecisionMatrix& matrix, TiePolicy policy = TiePolicy::Competition);

MethodResult evaluate(Method method, const DecisionMatrix& matrix,
                      TiePolicy policy = TiePolicy::Competition);

}  // namespace mcdm
