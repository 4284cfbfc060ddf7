#include "mcdm/dataset.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "case_study_data.hpp"

namespace mcdm {

namespace {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim_name(line.substr(start)));
      break;
    }
    fields.push_back(trim_name(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

// Lines with the trailing '\r' of CRLF removed; trailing blank lines dropped.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && trim_name(lines.back()).empty()) lines.pop_back();
  if (!lines.empty() && lines.front().starts_with("\xEF\xBB\xBF")) lines.front().erase(0, 3);
  return lines;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool matches_number_grammar(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  const std::size_t int_start = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i == int_start) return false;
  if (i < s.size() && s[i] == '.') {
    ++i;
    const std::size_t frac_start = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == frac_start) return false;
  }
  return i == s.size();
}

std::string format_number(double v) {
  // Shortest representation that round-trips.
  return fmt::format("{}", v);
}

}  // namespace

double parse_number(std::string_view cell, std::string_view where) {
  const std::string text = trim_name(cell);
  if (!matches_number_grammar(text)) {
    throw DataError(fmt::format("non-numeric cell '{}' at {}", text, where));
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DataError(fmt::format("unparseable number '{}' at {}", text, where));
  }
  return value;
}

MatrixDocument load_matrix_csv(std::istream& in, std::string source) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw DataError(fmt::format("{}: empty input (missing header)", source));

  const auto header = split_fields(lines.front());
  if (header.size() < 2) {
    throw DataError(fmt::format("{}: header needs 'alternative' plus at least one criterion",
                                source));
  }
  std::vector<Criterion> criteria = default_criteria(header.size() - 1);
  std::set<std::string> seen;
  for (std::size_t j = 1; j < header.size(); ++j) {
    if (header[j].empty()) throw DataError(fmt::format("{}: empty criterion name in header", source));
    if (!seen.insert(header[j]).second) {
      throw DataError(fmt::format("{}: duplicate criterion '{}'", source, header[j]));
    }
    criteria[j - 1].name = header[j];
  }

  std::vector<std::string> names;
  std::vector<std::vector<double>> values;
  seen.clear();
  for (std::size_t line_no = 1; line_no < lines.size(); ++line_no) {
    const auto fields = split_fields(lines[line_no]);
    const std::size_t row = line_no + 1;  // 1-based file line
    if (fields.size() != header.size()) {
      throw DataError(fmt::format("{}: ragged row at line {} ({} fields, expected {})", source,
                                  row, fields.size(), header.size()));
    }
    if (fields[0].empty()) throw DataError(fmt::format("{}: empty name at line {}", source, row));
    if (!seen.insert(fields[0]).second) {
      throw DataError(fmt::format("{}: duplicate alternative '{}' at line {}", source, fields[0],
                                  row));
    }
    std::vector<double> cells;
    cells.reserve(criteria.size());
    for (std::size_t j = 1; j < fields.size(); ++j) {
      cells.push_back(parse_number(
          fields[j], fmt::format("{} line {}, column {} ({})", source, row, j + 1,
                                 criteria[j - 1].name)));
    }
    names.push_back(fields[0]);
    values.push_back(std::move(cells));
  }
  if (values.empty()) throw DataError(fmt::format("{}: empty body", source));

  MatrixDocument doc{DecisionMatrix(std::move(names), std::move(criteria), std::move(values)),
                     std::move(source)};
  require_valid(doc.matrix);
  return doc;
}

MatrixDocument load_matrix_file(const std::string& path) {
  if (path == "builtin:banks") return builtin_bank_dataset();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open '{}'", path));
  return load_matrix_csv(in, path);
}

ReferenceRanking load_reference_csv(std::istream& in, std::string label) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw DataError(fmt::format("{}: empty input (missing header)", label));
  const auto header = split_fields(lines.front());
  if (header.size() != 2) {
    throw DataError(fmt::format("{}: expected header 'alternative,rank'", label));
  }

  ReferenceRanking out;
  out.label = std::move(label);
  std::set<std::string> seen;
  for (std::size_t line_no = 1; line_no < lines.size(); ++line_no) {
    const auto fields = split_fields(lines[line_no]);
    const std::size_t row = line_no + 1;
    if (fields.size() != 2) {
      throw DataError(fmt::format("{}: ragged row at line {}", out.label, row));
    }
    if (fields[0].empty()) throw DataError(fmt::format("{}: empty name at line {}", out.label, row));
    if (!seen.insert(fields[0]).second) {
      throw DataError(fmt::format("{}: duplicate alternative '{}' at line {}", out.label,
                                  fields[0], row));
    }
    const double rank = parse_number(fields[1], fmt::format("{} line {}", out.label, row));
    if (rank < 1.0) {
      throw DataError(fmt::format("{}: rank {} < 1 at line {}", out.label, fields[1], row));
    }
    out.names.push_back(fields[0]);
    out.ranks.ranks.push_back(rank);
  }
  if (out.names.empty()) throw DataError(fmt::format("{}: empty body", out.label));
  return out;
}

ReferenceRanking load_reference_file(const std::string& path) {
  if (path == "builtin:camels") return builtin_camels_reference();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open '{}'", path));
  return load_reference_csv(in, path);
}

void write_matrix_csv(std::ostream& out, const DecisionMatrix& matrix) {
  out << "alternative";
  for (const auto& c : matrix.criteria()) out << ',' << c.name;
  out << '\n';
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out << matrix.alternatives()[i];
    for (std::size_t j = 0; j < matrix.cols(); ++j) out << ',' << format_number(matrix.at(i, j));
    out << '\n';
  }
}

void write_reference_csv(std::ostream& out, const ReferenceRanking& reference) {
  out << "alternative,rank\n";
  for (std::size_t i = 0; i < reference.names.size(); ++i) {
    out << reference.names[i] << ',' << format_number(reference.ranks[i]) << '\n';
  }
}

const MatrixDocument& builtin_bank_dataset() {
  static const MatrixDocument doc = [] {
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;
    for (const auto& row : detail::kBankIndicators) {
      names.emplace_back(row.name);
      values.emplace_back(row.indicators.begin(), row.indicators.end());
    }
    return MatrixDocument{DecisionMatrix(std::move(names), default_criteria(6), std::move(values)),
                          "builtin:banks"};
  }();
  return doc;
}

const ReferenceRanking& builtin_camels_reference() {
  static const ReferenceRanking ref = [] {
    ReferenceRanking r;
    r.label = "CAMELS";
    for (const auto& row : detail::kPublishedResults) {
      r.names.emplace_back(row.name);
      r.ranks.ranks.push_back(row.camels_rank);
    }
    return r;
  }();
  return ref;
}

}  // namespace mcdm
