#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

struct MatrixDocument {
  DecisionMatrix matrix;
  std::string source;
};

struct ReferenceRanking {
  std::vector<std::string> names;
  RankVector ranks;
  std::string label;
};

/// Reads `alternative,<crit1>,...,<critN>` followed by one row per
/// alternative. Cells are trimmed; numbers follow `[-]?digits[.digits]?`.
/// LF or CRLF line endings; trailing blank lines are ignored.
///
/// Criteria get the default policy (all Cost, equal weights); callers apply
/// directions and weights separately. Throws DataError on ragged rows,
/// duplicate names, bad numbers (with row/column position) or an empty body.
MatrixDocument load_matrix_csv(std::istream& in, std::string source = "<stream>");
MatrixDocument load_matrix_file(const std::string& path);

// `alternative,rank`; ranks must be numeric and >= 1.
ReferenceRanking load_reference_csv(std::istream& in, std::string label = "reference");
ReferenceRanking load_reference_file(const std::string& path);

// Numbers are written in shortest round-trip form.
void write_matrix_csv(std::ostream& out, const DecisionMatrix& matrix);
void write_reference_csv(std::ostream& out, const ReferenceRanking& reference);

// Parses one numeric cell; throws DataError mentioning `where`.
double parse_number(std::string_view cell, std::string_view where);

/// The 30-bank, six-indicator case-study matrix (values are per-indicator
/// ranks, smaller is better). Source label "builtin:banks".
const MatrixDocument& builtin_bank_dataset();

/// The supervisory CAMELS ranking of the same 30 banks, same order.
const ReferenceRanking& builtin_camels_reference();

}  // namespace mcdm
