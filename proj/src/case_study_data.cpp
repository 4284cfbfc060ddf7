#include "case_study_data.hpp"

namespace mcdm::detail {

// Per-indicator ranks C1..C6 of the 30 banks (smaller is better).
const std::array<BankIndicatorRow, 30> kBankIndicators{{
    {"ABB", {13, 14, 15, 11, 16, 22}},
    {"ACB", {18, 10, 11, 6, 26, 8}},
    {"AGRIBANK", {27, 28, 6, 14, 28, 2}},
    {"BAC A BANK", {16, 4, 7, 16, 19, 21}},
    {"BID", {29, 29, 3, 10, 17, 1}},
    {"CTG", {24, 26, 10, 21, 12, 3}},
    {"EIB", {6, 20, 21, 24, 22, 14}},
    {"HDB", {14, 4, 23, 7, 1, 12}},
    {"KLB", {8, 1, 30, 17, 17, 28}},
    {"LIEN VIET", {22, 13, 18, 13, 11, 13}},
    {"MBB", {7, 17, 11, 2, 8, 7}},
    {"MSB", {5, 24, 29, 15, 12, 18}},
    {"NAM A", {25, 10, 13, 11, 9, 23}},
    {"NCB", {28, 4, 28, 28, 23, 24}},
    {"OCB", {9, 15, 13, 3, 3, 20}},
    {"PGBANK", {3, 27, 5, 22, 23, 29}},
    {"PVCOMBANK", {17, 9, 27, 29, 27, 15}},
    {"SCB", {30, 10, 24, 30, 30, 5}},
    {"SEABANK", {21, 19, 16, 25, 4, 15}},
    {"SGB", {1, 21, 22, 23, 20, 30}},
    {"SHB", {26, 25, 9, 19, 12, 9}},
    {"STB", {19, 22, 25, 20, 29, 6}},
    {"TCB", {2, 16, 4, 3, 9, 11}},
    {"TPBANK", {11, 2, 20, 9, 2, 19}},
    {"VCB", {23, 23, 1, 8, 12, 4}},
    {"VIB", {12, 17, 7, 5, 5, 17}},
    {"VIET A BANK", {20, 3, 2, 27, 6, 25}},
    {"VIETCAPITAL", {15, 4, 18, 26, 20, 27}},
    {"VPB", {4, 30, 25, 1, 6, 9}},
    {"VIETBANK", {10, 8, 17, 17, 23, 26}},
}};

// Published per-method results and the CAMELS benchmark rank, same order.
// Fields: MOORA Q, rank; RAM RI, rank; FUCA S, rank; CURLI R, rank; CAMELS rank.
const std::array<PublishedRow, 30> kPublishedResults{{
    {"ABB", 0.0262, 16, 1.4258, 16, 15.1667, 15, -3, 14, 14},
    {"ACB", 0.0228, 22, 1.4243, 22, 13.1667, 9, -25, 9, 9},
    {"AGRIBANK", 0.0303, 9, 1.4277, 9, 17.5000, 22, 24, 22, 22},
    {"BAC A BANK", 0.0239, 20, 1.4248, 20, 13.8333, 10, -16, 11, 10},
    {"BID", 0.0256, 19, 1.4256, 19, 14.8333, 12, -7, 12, 12},
    {"CTG", 0.0276, 15, 1.4265, 15, 16.0000, 16, 9, 16, 16},
    {"EIB", 0.0308, 8, 1.4279, 8, 17.8333, 23, 28, 23, 23},
    {"HDB", 0.0175, 28, 1.4220, 28, 10.1667, 3, -61, 3, 3},
    {"KLB", 0.0291, 12, 1.4271, 12, 16.8333, 19, 18, 18, 19},
    {"LIEN VIET", 0.0259, 18, 1.4257, 18, 15.0000, 13, -5, 13, 13},
    {"MBB", 0.0150, 29, 1.4209, 29, 8.6667, 2, -80, 2, 2},
    {"MSB", 0.0297, 10, 1.4274, 10, 17.1667, 21, 23, 21, 21},
    {"NAM A", 0.0261, 17, 1.4258, 17, 15.1667, 14, 1, 15, 14},
    {"NCB", 0.0388, 1, 1.4314, 1, 22.5000, 30, 89, 30, 30},
    {"OCB", 0.0181, 26, 1.4223, 26, 10.5000, 4, -58, 5, 4},
    {"PGBANK", 0.0314, 7, 1.4282, 7, 18.1667, 24, 34, 24, 24},
    {"PVCOMBANK", 0.0357, 3, 1.4300, 3, 20.6667, 28, 63, 28, 28},
    {"SCB", 0.0372, 2, 1.4307, 2, 21.5000, 29, 74, 29, 29},
    {"SEABANK", 0.0287, 14, 1.4269, 14, 16.6667, 17, 15, 17, 17},
    {"SGB", 0.0337, 5, 1.4292, 5, 19.5000, 26, 49, 26, 26},
    {"SHB", 0.0288, 13, 1.4270, 13, 16.6667, 17, 18, 18, 17},
    {"STB", 0.0349, 4, 1.4297, 4, 20.1667, 27, 57, 27, 27},
    {"TCB", 0.0130, 30, 1.4200, 30, 7.5000, 1, -94, 1, 1},
    {"TPBANK", 0.0181, 27, 1.4222, 27, 10.5000, 4, -60, 4, 4},
    {"VCB", 0.0204, 24, 1.4233, 24, 11.8333, 7, -41, 7, 7},
    {"VIB", 0.0181, 25, 1.4223, 25, 10.5000, 4, -58, 5, 4},
    {"VIET A BANK", 0.0238, 21, 1.4248, 21, 13.8333, 10, -19, 10, 10},
    {"VIETCAPITAL", 0.0316, 6, 1.4282, 6, 18.3333, 25, 39, 25, 25},
    {"VPB", 0.0216, 23, 1.4238, 23, 12.5000, 8, -33, 8, 8},
    {"VIETBANK", 0.0291, 11, 1.4271, 11, 16.8333, 20, 19, 20, 19},
}};

}  // namespace mcdm::detail
