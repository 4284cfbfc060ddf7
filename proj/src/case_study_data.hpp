#pragma once

#include <array>

namespace mcdm::detail {

struct BankIndicatorRow {
  const char* name;
  std::array<double, 6> indicators;
};

struct PublishedRow {
  const char* name;
  double moora_score;
  double moora_rank;
  double ram_score;
  double ram_rank;
  double fuca_score;
  double fuca_rank;
  double curli_score;
  double curli_rank;
  double camels_rank;
};

extern const std::array<BankIndicatorRow, 30> kBankIndicators;
extern const std::array<PublishedRow, 30> kPublishedResults;

}  // namespace mcdm::detail
