#include "cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "mcdm/compare.hpp"
#include "mcdm/core.hpp"
#include "mcdm/dataset.hpp"
#include "mcdm/methods.hpp"
#include "mcdm/replication.hpp"

namespace mcdm::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& token) {
  if (token == "table") return Format::Table;
  if (token == "csv") return Format::Csv;
  if (token == "json") return Format::Json;
  throw ConfigError(fmt::format("unknown format '{}' (expected table|csv|json)", token));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim_name(item));
  return out;
}

// Machine-readable numbers carry 12 significant digits.
std::string sig12(double v) { return fmt::format("{:.12g}", v); }

ordered_json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  const auto text = sig12(v);
  double rounded = v;
  std::from_chars(text.data(), text.data() + text.size(), rounded);
  return rounded;
}

ordered_json json_rank(double r) {
  if (r == std::floor(r)) return static_cast<long long>(r);
  return json_number(r);
}

// 4 decimals, half away from zero.
std::string fixed4(double v) {
  if (std::isnan(v)) return "n/a";
  const double rounded = std::round(v * 1e4) / 1e4;
  return fmt::format("{:.4f}", rounded == 0.0 ? 0.0 : rounded);
}

std::string score_text(Method method, double v) {
  if (method == Method::Curli) return fmt::format("{}", static_cast<long long>(v));
  return fixed4(v);
}

ordered_json comparison_json(const ComparisonReport& c) {
  ordered_json j;
  j["spearman_naive"] = json_number(c.spearman_naive);
  j["spearman_tie_adjusted"] = json_number(c.spearman_tie_adjusted);
  j["exact_matches"] = c.exact_matches;
  j["sum_sq_diff"] = json_number(c.sum_sq_diff);
  j["max_abs_diff"] = json_number(c.max_abs_diff);
  return j;
}

void write_comparison_table(std::ostream& out, const ComparisonReport& c) {
  fmt::print(out, "  spearman (naive)         {}\n", fixed4(c.spearman_naive));
  fmt::print(out, "  spearman (tie-adjusted)  {}\n", fixed4(c.spearman_tie_adjusted));
  fmt::print(out, "  exact matches            {}\n", c.exact_matches);
  fmt::print(out, "  sum D^2                  {}\n", format_rank(c.sum_sq_diff));
  fmt::print(out, "  max |D|                  {}\n", format_rank(c.max_abs_diff));
}

std::size_t name_width(const std::vector<std::string>& names) {
  std::size_t w = 11;
  for (const auto& n : names) w = std::max(w, n.size());
  return w;
}

// Reorders `other` onto the alternative order of `names`; throws DataError
// listing every unmatched name on either side.
RankVector join_by_name(const std::vector<std::string>& names, const ReferenceRanking& other) {
  std::map<std::string, double> lookup;
  for (std::size_t i = 0; i < other.names.size(); ++i) lookup[other.names[i]] = other.ranks[i];

  std::vector<std::string> unmatched;
  RankVector out;
  for (const auto& n : names) {
    auto it = lookup.find(n);
    if (it == lookup.end()) {
      unmatched.push_back(n);
    } else {
      out.ranks.push_back(it->second);
      lookup.erase(it);
    }
  }
  for (const auto& [n, r] : lookup) unmatched.push_back(n);
  if (!unmatched.empty()) {
    throw DataError(fmt::format("alternative sets differ; unmatched names: {}",
                                fmt::join(unmatched, ", ")));
  }
  return out;
}

struct RankOptions {
  std::string input = "builtin:banks";
  std::string reference;
  std::string methods = "moora,ram,fuca,curli";
  std::string weights;
  std::string directions;
  std::string ties = "competition";
  std::string format = "table";
};

int cmd_rank(const RankOptions& opt, std::ostream& out) {
  // Configuration is checked before any data is read.
  std::vector<Method> methods;
  for (const auto& token : split_list(opt.methods)) {
    const Method m = parse_method(token);
    if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
  }
  if (methods.empty()) throw ConfigError("no method selected");
  const TiePolicy policy = parse_tie_policy(opt.ties);
  const Format format = parse_format(opt.format);

  std::vector<double> weights;
  if (!opt.weights.empty()) {
    for (const auto& token : split_list(opt.weights)) {
      try {
        weights.push_back(parse_number(token, "--weights"));
      } catch (const DataError& e) {
        throw ConfigError(e.what());
      }
    }
  }
  std::vector<Direction> directions;
  if (!opt.directions.empty()) {
    for (const auto& token : split_list(opt.directions)) {
      directions.push_back(parse_direction(token));
    }
  }

  const auto doc = load_matrix_file(opt.input);
  DecisionMatrix matrix = doc.matrix;
  if (!weights.empty()) matrix = matrix.with_weights(weights);
  if (!directions.empty()) matrix = matrix.with_directions(directions);

  std::optional<RankVector> reference;
  if (!opt.reference.empty()) {
    reference = join_by_name(matrix.alternatives(), load_reference_file(opt.reference));
  }

  std::vector<MethodResult> results;
  for (Method m : methods) results.push_back(evaluate(m, matrix, policy));
  const auto& names = matrix.alternatives();

  switch (format) {
    case Format::Json: {
      ordered_json docs = ordered_json::array();
      for (const auto& r : results) {
        ordered_json j;
        j["method"] = to_string(r.method);
        j["alternatives"] = names;
        ordered_json scores = ordered_json::array();
        ordered_json ranks = ordered_json::array();
        for (std::size_t i = 0; i < names.size(); ++i) {
          scores.push_back(json_number(r.scores[i]));
          ranks.push_back(json_rank(r.ranks[i]));
        }
        j["scores"] = std::move(scores);
        j["ranks"] = std::move(ranks);
        if (reference) j["comparison"] = comparison_json(agreement(r.ranks, *reference));
        docs.push_back(std::move(j));
      }
      out << (docs.size() == 1 ? docs.front() : docs).dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "method,alternative,score,rank\n";
      for (const auto& r : results) {
        for (std::size_t i = 0; i < names.size(); ++i) {
          fmt::print(out, "{},{},{},{}\n", to_string(r.method), names[i], sig12(r.scores[i]),
                     format_rank(r.ranks[i]));
        }
      }
      break;
    case Format::Table: {
      const auto w = name_width(names);
      for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        if (k > 0) out << '\n';
        fmt::print(out, "{} ({} ties, {} ranks first)\n", to_string(r.method), to_string(policy),
                   canonical_order(r.method) == RankOrder::Descending ? "largest" : "smallest");
        fmt::print(out, "{:<{}}  {:>10}  {:>5}\n", "alternative", w, "score", "rank");
        for (std::size_t i = 0; i < names.size(); ++i) {
          fmt::print(out, "{:<{}}  {:>10}  {:>5}\n", names[i], w,
                     score_text(r.method, r.scores[i]), format_rank(r.ranks[i]));
        }
        if (reference) {
          out << "comparison with reference:\n";
          write_comparison_table(out, agreement(r.ranks, *reference));
        }
      }
      break;
    }
  }
  return kOk;
}

int cmd_compare(const std::string& input, const std::string& reference_path,
                const std::string& format_token, std::ostream& out) {
  const Format format = parse_format(format_token);
  const auto a = load_reference_file(input);
  const auto b = load_reference_file(reference_path);
  const auto aligned = join_by_name(a.names, b);
  const auto report = agreement(a.ranks, aligned);

  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["alternatives"] = a.names;
      ordered_json ra = ordered_json::array();
      ordered_json rb = ordered_json::array();
      for (std::size_t i = 0; i < a.names.size(); ++i) {
        ra.push_back(json_rank(a.ranks[i]));
        rb.push_back(json_rank(aligned[i]));
      }
      j["ranks"] = std::move(ra);
      j["reference_ranks"] = std::move(rb);
      j["comparison"] = comparison_json(report);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "spearman_naive,spearman_tie_adjusted,exact_matches,sum_sq_diff,max_abs_diff\n";
      fmt::print(out, "{},{},{},{},{}\n", sig12(report.spearman_naive),
                 sig12(report.spearman_tie_adjusted), report.exact_matches,
                 sig12(report.sum_sq_diff), sig12(report.max_abs_diff));
      break;
    case Format::Table:
      fmt::print(out, "{} vs {} ({} alternatives)\n", a.label, b.label, a.names.size());
      write_comparison_table(out, report);
      break;
  }
  return kOk;
}

void write_replication_table(std::ostream& out, const ReplicationReport& report) {
  const auto& pub = published_results();
  const auto& camels = builtin_camels_reference().ranks;
  const auto& names = report.alternatives;
  const auto w = name_width(names);

  out << "Scores and ranks (* = rank differs from the published column)\n";
  fmt::print(out, "{:<{}}", "alternative", w);
  for (const auto& m : report.methods) fmt::print(out, "  {:>9} {:>5}", to_string(m.method), "rank");
  fmt::print(out, "  {:>6}\n", "CAMELS");
  for (std::size_t i = 0; i < names.size(); ++i) {
    fmt::print(out, "{:<{}}", names[i], w);
    for (const auto& m : report.methods) {
      const auto& r = m.result;
      const bool differs = r.ranks[i] != pub.column(m.method).ranks[i];
      fmt::print(out, "  {:>9} {:>4}{}", score_text(m.method, r.scores[i]),
                 format_rank(r.ranks[i]), differs ? '*' : ' ');
    }
    fmt::print(out, "  {:>6}\n", format_rank(camels[i]));
  }

  out << "\nRank correlation with CAMELS\n";
  fmt::print(out, "{:<8}  {:>10}  {:>12}  {:>15}  {:>9}  {:>7}  {:>7}\n", "method", "naive",
             "tie-adjusted", "naive (pub col)", "published", "matches", "sum D^2");
  for (const auto& m : report.methods) {
    fmt::print(out, "{:<8}  {:>10}  {:>12}  {:>15}  {:>9}  {:>7}  {:>7}\n", to_string(m.method),
               fixed4(m.engine_vs_camels.spearman_naive),
               fixed4(m.engine_vs_camels.spearman_tie_adjusted),
               fixed4(m.published_vs_camels.spearman_naive),
               fixed4(pub.column(m.method).coefficient_vs_camels),
               m.engine_vs_camels.exact_matches, format_rank(m.engine_vs_camels.sum_sq_diff));
  }

  out << "\nDiscrepancy log\n";
  for (const auto& d : report.discrepancies) fmt::print(out, "  - {}: {}\n", d.cell, d.description);

  if (report.ok()) {
    out << "\nreplication holds: every score, rank and coefficient is within tolerance\n";
  } else {
    out << "\nreplication drift:\n";
    for (const auto& d : report.drift) fmt::print(out, "  - {}\n", d);
  }
}

ordered_json replication_json(const ReplicationReport& report) {
  const auto& pub = published_results();
  ordered_json j;
  j["alternatives"] = report.alternatives;
  ordered_json methods = ordered_json::array();
  for (const auto& m : report.methods) {
    const auto& col = pub.column(m.method);
    ordered_json e;
    e["method"] = to_string(m.method);
    e["direction"] = to_string(m.direction);
    ordered_json scores = ordered_json::array();
    ordered_json ranks = ordered_json::array();
    ordered_json pscores = ordered_json::array();
    ordered_json pranks = ordered_json::array();
    for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
      scores.push_back(json_number(m.result.scores[i]));
      ranks.push_back(json_rank(m.result.ranks[i]));
      pscores.push_back(json_number(col.scores[i]));
      pranks.push_back(json_rank(col.ranks[i]));
    }
    e["scores"] = std::move(scores);
    e["ranks"] = std::move(ranks);
    e["published_scores"] = std::move(pscores);
    e["published_ranks"] = std::move(pranks);
    e["max_score_deviation"] = json_number(m.max_score_deviation);
    e["rank_matches"] = m.rank_matches;
    e["comparison"] = comparison_json(m.engine_vs_camels);
    e["published_comparison"] = comparison_json(m.published_vs_camels);
    e["published_coefficient"] = json_number(col.coefficient_vs_camels);
    methods.push_back(std::move(e));
  }
  j["methods"] = std::move(methods);
  ordered_json log = ordered_json::array();
  for (const auto& d : report.discrepancies) {
    log.push_back(ordered_json{{"cell", d.cell}, {"description", d.description}});
  }
  j["discrepancies"] = std::move(log);
  j["drift"] = report.drift;
  j["ok"] = report.ok();
  return j;
}

int cmd_replicate(const std::string& format_token, std::ostream& out) {
  const Format format = parse_format(format_token);
  const auto report = replicate();
  switch (format) {
    case Format::Json:
      out << replication_json(report).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "method,alternative,score,rank,published_score,published_rank\n";
      for (const auto& m : report.methods) {
        const auto& col = published_results().column(m.method);
        for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
          fmt::print(out, "{},{},{},{},{},{}\n", to_string(m.method), report.alternatives[i],
                     sig12(m.result.scores[i]), format_rank(m.result.ranks[i]),
                     sig12(col.scores[i]), format_rank(col.ranks[i]));
        }
      }
      break;
    case Format::Table:
      write_replication_table(out, report);
      break;
  }
  return report.ok() ? kOk : kReplicationDrift;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-criteria ranking with MOORA, RAM, FUCA and CURLI", "mcdm"};
  app.require_subcommand(1);

  std::string output_path;
  std::string format = "table";

  RankOptions rank_opt;
  auto* rank = app.add_subcommand("rank", "Score and rank a decision matrix");
  rank->add_option("--input", rank_opt.input, "Matrix CSV path, or builtin:banks")
      ->capture_default_str();
  rank->add_option("--reference", rank_opt.reference,
                   "Reference ranking CSV (or builtin:camels) to compare against");
  rank->add_option("--method", rank_opt.methods, "Comma list of moora|ram|fuca|curli")
      ->capture_default_str();
  rank->add_option("--weights", rank_opt.weights, "Comma list of positive weights");
  rank->add_option("--directions", rank_opt.directions, "Comma list of benefit|cost");
  rank->add_option("--ties", rank_opt.ties, "competition|ordinal|average")->capture_default_str();
  rank->add_option("--format", rank_opt.format, "table|csv|json")->capture_default_str();
  rank->add_option("--output", output_path, "Write to PATH instead of standard output");

  std::string compare_input;
  std::string compare_reference = "builtin:camels";
  auto* compare = app.add_subcommand("compare", "Compare two rankings joined by name");
  compare->add_option("--input", compare_input, "Ranking CSV (alternative,rank)")->required();
  compare->add_option("--reference", compare_reference, "Reference ranking CSV")
      ->capture_default_str();
  compare->add_option("--format", format, "table|csv|json")->capture_default_str();
  compare->add_option("--output", output_path, "Write to PATH instead of standard output");

  auto* replicate_cmd =
      app.add_subcommand("replicate", "Recompute the 30-bank case study and check it");
  replicate_cmd->add_option("--format", format, "table|csv|json")->capture_default_str();
  replicate_cmd->add_option("--output", output_path, "Write to PATH instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    // Render into a buffer so a failing command leaves no partial output.
    std::ostringstream buffer;
    int status = kOk;
    if (*rank) {
      status = cmd_rank(rank_opt, buffer);
    } else if (*compare) {
      status = cmd_compare(compare_input, compare_reference, format, buffer);
    } else if (*replicate_cmd) {
      status = cmd_replicate(format, buffer);
    }
    if (output_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!(file << buffer.str())) throw DataError(fmt::format("cannot write '{}'", output_path));
    }
    return status;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace mcdm::cli
