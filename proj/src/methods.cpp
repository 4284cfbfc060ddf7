#include "mcdm/methods.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "mcdm/normalize.hpp"

namespace mcdm {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Moora:
      return "MOORA";
    case Method::Ram:
      return "RAM";
    case Method::Fuca:
      return "FUCA";
    case Method::Curli:
      return "CURLI";
  }
  return "MOORA";
}

Method parse_method(std::string_view token) {
  std::string name = trim_name(token);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (name == "moora") return Method::Moora;
  if (name == "ram") return Method::Ram;
  if (name == "fuca") return Method::Fuca;
  if (name == "curli") return Method::Curli;
  throw ConfigError(fmt::format("unknown method '{}' (expected moora|ram|fuca|curli)", name));
}

RankOrder canonical_order(Method method) {
  switch (method) {
    case Method::Moora:
    case Method::Ram:
      return RankOrder::Descending;
    case Method::Fuca:
    case Method::Curli:
      return RankOrder::Ascending;
  }
  return RankOrder::Descending;
}

namespace {

MethodResult finish(Method method, std::vector<double> scores, TiePolicy policy) {
  auto ranks = rank_scores(scores, canonical_order(method), policy);
  return {method, std::move(scores), std::move(ranks)};
}

}  // namespace

MooraIntermediates moora_intermediates(const DecisionMatrix& matrix) {
  const auto weighted = apply_weights(vector_normalize(matrix), matrix.criteria());
  const std::size_t m = matrix.rows();
  const auto& criteria = matrix.criteria();

  const auto benefit_count = static_cast<double>(
      std::count_if(criteria.begin(), criteria.end(),
                    [](const Criterion& c) { return c.direction == Direction::Benefit; }));
  const double cost_count = static_cast<double>(criteria.size()) - benefit_count;

  MooraIntermediates out{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0),
                         std::vector<double>(m, 0.0)};
  for (std::size_t i = 0; i < m; ++i) {
    double benefit = 0.0;
    double cost = 0.0;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      (criteria[j].direction == Direction::Benefit ? benefit : cost) += weighted.values[i][j];
    }
    out.benefit[i] = benefit_count > 0 ? benefit / benefit_count : 0.0;
    out.cost[i] = cost_count > 0 ? cost / cost_count : 0.0;
    out.net[i] = out.benefit[i] - out.cost[i];
  }
  return out;
}

MethodResult moora(const DecisionMatrix& matrix, TiePolicy policy) {
  return finish(Method::Moora, moora_intermediates(matrix).net, policy);
}

double ram_index(double benefit_total, double cost_total) {
  return std::pow(2.0 + benefit_total, 1.0 / (2.0 + cost_total));
}

RamIntermediates ram_intermediates(const DecisionMatrix& matrix) {
  const auto weighted = apply_weights(sum_normalize(matrix), matrix.criteria());
  const std::size_t m = matrix.rows();
  const auto& criteria = matrix.criteria();

  RamIntermediates out{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0),
                       std::vector<double>(m, 0.0)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      auto& total =
          criteria[j].direction == Direction::Benefit ? out.benefit_total : out.cost_total;
      total[i] += weighted.values[i][j];
    }
    out.index[i] = ram_index(out.benefit_total[i], out.cost_total[i]);
  }
  return out;
}

MethodResult ram(const DecisionMatrix& matrix, TiePolicy policy) {
  return finish(Method::Ram, ram_intermediates(matrix).index, policy);
}

MethodResult fuca(const DecisionMatrix& matrix, TiePolicy policy) {
  const auto ranks = column_ranks(matrix, policy);
  const auto& criteria = matrix.criteria();
  std::vector<double> scores(matrix.rows(), 0.0);
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      scores[i] += ranks[j][i] * criteria[j].weight;
    }
  }
  return finish(Method::Fuca, std::move(scores), policy);
}

CurliScoreTable curli_scores(const DecisionMatrix& matrix) {
  require_valid(matrix);
  const std::size_t m = matrix.rows();
  const std::size_t n = matrix.cols();

  // Each alternative's net score is (#worse) - (#better) in the column, which
  // a sort gives in O(m log m) per criterion.
  CurliScoreTable out{std::vector<std::vector<int>>(m, std::vector<int>(n, 0))};
  for (std::size_t j = 0; j < n; ++j) {
    auto sorted = matrix.column(j);
    std::sort(sorted.begin(), sorted.end());
    const bool benefit = matrix.criteria()[j].direction == Direction::Benefit;
    for (std::size_t i = 0; i < m; ++i) {
      const double x = matrix.at(i, j);
      const auto smaller = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
      const auto larger = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x);
      const auto net = static_cast<int>(smaller - larger);
      out.net[i][j] = benefit ? net : -net;
    }
  }
  return out;
}

MethodResult curli(const DecisionMatrix& matrix, TiePolicy policy) {
  const auto table = curli_scores(matrix);
  std::vector<double> scores;
  scores.reserve(table.net.size());
  for (const auto& row : table.net) {
    int total = 0;
    for (int p : row) total += p;
    scores.push_back(static_cast<double>(total));
  }
  return finish(Method::Curli, std::move(scores), policy);
}

MethodResult evaluate(Method method, const DecisionMatrix& matrix, TiePolicy policy) {
  switch (method) {
    case Method::Moora:
      return moora(matrix, policy);
    case Method::Ram:
      return ram(matrix, policy);
    case Method::Fuca:
      return fuca(matrix, policy);
    case Method::Curli:
      return curli(matrix, policy);
  }
  throw ConfigError("unknown method");
}

}  // namespace mcdm
