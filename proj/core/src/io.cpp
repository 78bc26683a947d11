#include "pfm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "pfm/errors.hpp"

namespace pfm {

using Json = nlohmann::ordered_json;

std::optional<InputFormat> parse_input_format(std::string_view name) {
  if (name == "csv") return InputFormat::kCsv;
  if (name == "json") return InputFormat::kJson;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out(buf);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Number and table helpers

std::string shortest(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string exponent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

/// Left-aligns the first column and right-aligns the rest.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c == 0) {
        line += row[c] + pad;
      } else {
        line += "  " + pad + row[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) out += ',';
    out += csv_escape(fields[k]);
  }
  return out + "\n";
}

std::string_view direction_name(Direction d) {
  return d == Direction::kHigherBetter ? "higher_better" : "lower_better";
}

// ---------------------------------------------------------------------------
// CSV problem parsing

std::vector<std::string> split_csv(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          current += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? current : std::string(trim(current)));
      current.clear();
      was_quoted = false;
    } else {
      current += c;
    }
  }
  if (quoted) throw ParseError(line_no, "", "unterminated quoted field");
  fields.push_back(was_quoted ? current : std::string(trim(current)));
  return fields;
}

double parse_number(std::string_view text, std::size_t line_no, const std::string& field) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ParseError(line_no, field, "'" + std::string(text) + "' is not a finite number");
  }
  return value;
}

WeightVector make_weights(std::vector<double> raw, const ParseOptions& options) {
  return options.normalize_weights ? WeightVector::normalized(std::move(raw))
                                   : WeightVector(std::move(raw));
}

ProblemDocument parse_csv(std::string_view bytes, const ParseOptions& options) {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> criteria;
  std::vector<std::string> alternatives;
  std::vector<std::vector<double>> values;
  std::optional<std::vector<double>> weights;
  bool have_header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    const auto eol = bytes.find('\n', pos);
    std::string_view line = bytes.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? bytes.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (trim(line).empty()) continue;
    if (trim(line).front() == '#') {
      const auto body = trim(trim(line).substr(1));
      const auto colon = body.find(':');
      if (colon != std::string_view::npos && colon > 0) {
        metadata[std::string(trim(body.substr(0, colon)))] =
            std::string(trim(body.substr(colon + 1)));
      }
      continue;
    }
    if (weights) throw ParseError(line_no, "", "content after the weights row");

    auto fields = split_csv(line, line_no);
    if (!have_header) {
      if (fields.size() < 2) throw ParseError(line_no, "header", "no criterion columns");
      criteria.assign(fields.begin() + 1, fields.end());
      have_header = true;
      continue;
    }
    if (fields.size() != criteria.size() + 1) {
      throw DimensionMismatch("line " + std::to_string(line_no) + " has " +
                              std::to_string(fields.size() - 1) + " scores, expected " +
                              std::to_string(criteria.size()));
    }
    std::vector<double> row;
    row.reserve(criteria.size());
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      row.push_back(parse_number(fields[j + 1], line_no, criteria[j]));
    }
    if (fields[0] == "weights") {
      weights = std::move(row);
    } else {
      alternatives.push_back(fields[0]);
      values.push_back(std::move(row));
    }
  }
  if (!have_header) throw ParseError(0, "header", "empty problem file");
  if (!weights) throw ParseError(line_no, "weights", "missing final 'weights' row");

  PreferenceMatrix matrix(std::move(alternatives), std::move(criteria),
                          Grid::from_rows(values));
  return ProblemDocument{std::move(matrix), make_weights(std::move(*weights), options),
                         std::move(metadata)};
}

// ---------------------------------------------------------------------------
// JSON problem parsing

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(0, key, "missing required field");
  return doc.at(key);
}

std::vector<std::string> string_array(const Json& node, const std::string& field) {
  if (!node.is_array()) throw ParseError(0, field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < node.size(); ++k) {
    if (!node[k].is_string()) {
      throw ParseError(0, field + "[" + std::to_string(k) + "]", "expected a string");
    }
    out.push_back(node[k].get<std::string>());
  }
  return out;
}

std::vector<double> number_array(const Json& node, const std::string& field) {
  if (!node.is_array()) throw ParseError(0, field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < node.size(); ++k) {
    if (!node[k].is_number()) {
      throw ParseError(0, field + "[" + std::to_string(k) + "]", "expected a number");
    }
    out.push_back(node[k].get<double>());
  }
  return out;
}

ProblemDocument parse_json(std::string_view bytes, const ParseOptions& options) {
  Json doc;
  try {
    doc = Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(0, "byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "", "top level must be an object");

  auto criteria = string_array(require(doc, "criteria"), "criteria");
  auto alternatives = string_array(require(doc, "alternatives"), "alternatives");
  const Json& values_node = require(doc, "values");
  if (!values_node.is_array()) throw ParseError(0, "values", "expected an array of rows");
  std::vector<std::vector<double>> values;
  for (std::size_t i = 0; i < values_node.size(); ++i) {
    values.push_back(number_array(values_node[i], "values[" + std::to_string(i) + "]"));
    if (values.back().size() != criteria.size()) {
      throw DimensionMismatch("values[" + std::to_string(i) + "] has " +
                              std::to_string(values.back().size()) + " scores, expected " +
                              std::to_string(criteria.size()));
    }
  }
  if (values.size() != alternatives.size()) {
    throw DimensionMismatch(std::to_string(values.size()) + " value rows for " +
                            std::to_string(alternatives.size()) + " alternatives");
  }
  auto weights = number_array(require(doc, "weights"), "weights");

  std::map<std::string, std::string> metadata;
  if (doc.contains("metadata")) {
    const Json& meta = doc.at("metadata");
    if (!meta.is_object()) throw ParseError(0, "metadata", "expected an object");
    for (const auto& [key, value] : meta.items()) {
      if (!value.is_string()) throw ParseError(0, "metadata." + key, "expected a string");
      metadata[key] = value.get<std::string>();
    }
  }

  const std::size_t rows = values.size();
  Grid grid = rows == 0 ? Grid(0, criteria.size()) : Grid::from_rows(values);
  PreferenceMatrix matrix(std::move(alternatives), std::move(criteria), std::move(grid));
  return ProblemDocument{std::move(matrix), make_weights(std::move(weights), options),
                         std::move(metadata)};
}

// ---------------------------------------------------------------------------
// JSON fragments shared by several writers

Json ranking_json(const Ranking& ranking, const std::vector<std::string>& labels) {
  Json groups = Json::array();
  for (const auto& group : ranking.tie_groups) {
    Json g = Json::array();
    for (std::size_t idx : group) g.push_back(labels[idx]);
    groups.push_back(std::move(g));
  }
  return Json{{"tie_groups", std::move(groups)},
              {"dense_ranks", ranking.dense_ranks},
              {"ordering", format_ordering(ranking, labels)}};
}

Json comparability_json(const ComparabilityReport& report) {
  Json criteria = Json::array();
  for (std::size_t j = 0; j < report.criteria.size(); ++j) {
    const auto& r = report.per_criterion[j];
    criteria.push_back(
        Json{{"criterion", report.criteria[j]}, {"min", r.min}, {"max", r.max}, {"range", r.range}});
  }
  Json pairs = Json::array();
  for (const auto& [a, b] : report.violating_pairs) {
    pairs.push_back(Json::array({report.criteria[a], report.criteria[b]}));
  }
  return Json{{"comparable", report.comparable},
              {"criteria", std::move(criteria)},
              {"violating_pairs", std::move(pairs)}};
}

Json invariance_json(const InvarianceReport& report) {
  Json out{{"method", method_name(report.method)},
           {"seed", report.seed},
           {"trials", report.trials},
           {"violations", report.violations},
           {"skipped", report.skipped},
           {"redraws", report.redraws}};
  if (const auto& cx = report.first_counterexample) {
    Json maps = Json::array();
    for (const auto& m : cx->maps) maps.push_back(Json{{"slope", m.slope()}, {"intercept", m.intercept()}});
    out["counterexample"] = Json{{"trial", cx->trial},
                                 {"criteria", cx->matrix.criteria()},
                                 {"alternatives", cx->matrix.alternatives()},
                                 {"values", cx->matrix.values().to_rows()},
                                 {"maps", std::move(maps)},
                                 {"before", ranking_json(cx->before, report.alternatives)},
                                 {"after", ranking_json(cx->after, report.alternatives)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Text fragments

std::string comparability_text(const ComparabilityReport& report) {
  std::vector<std::vector<std::string>> rows{{"Criterion", "min", "max", "range"}};
  for (std::size_t j = 0; j < report.criteria.size(); ++j) {
    const auto& r = report.per_criterion[j];
    rows.push_back({report.criteria[j], shortest(r.min), shortest(r.max), shortest(r.range)});
  }
  std::string out = render_table(rows);
  out += std::string("comparable: ") + (report.comparable ? "yes" : "no") + "\n";
  if (!report.violating_pairs.empty()) {
    out += "violating pairs:";
    for (const auto& [a, b] : report.violating_pairs) {
      out += " (" + report.criteria[a] + ", " + report.criteria[b] + ")";
    }
    out += "\n";
  }
  return out;
}

std::string invariance_text(const InvarianceReport& report) {
  std::string out = "Invariance trials: " + std::string(method_name(report.method)) + "\n";
  out += render_table({{"  seed", std::to_string(report.seed)},
                       {"  trials", std::to_string(report.trials)},
                       {"  violations", std::to_string(report.violations)},
                       {"  skipped", std::to_string(report.skipped)},
                       {"  redraws", std::to_string(report.redraws)}});
  if (const auto& cx = report.first_counterexample) {
    out += "  first counterexample (trial " + std::to_string(cx->trial) + "):\n";
    for (std::size_t j = 0; j < cx->maps.size(); ++j) {
      const double b = cx->maps[j].intercept();
      out += "    " + cx->matrix.criteria()[j] + ": p' = " + shortest(cx->maps[j].slope()) +
             " * p " + (std::signbit(b) ? "- " : "+ ") + shortest(std::abs(b)) + "\n";
    }
    out += "    before: " + format_ordering(cx->before, report.alternatives) + "\n";
    out += "    after:  " + format_ordering(cx->after, report.alternatives) + "\n";
  }
  return out;
}

std::vector<std::string> invariance_csv_row(const InvarianceReport& r) {
  return {std::string(method_name(r.method)),
          std::to_string(r.seed),
          std::to_string(r.trials),
          std::to_string(r.violations),
          std::to_string(r.skipped),
          std::to_string(r.redraws),
          r.first_counterexample ? std::to_string(r.first_counterexample->trial) : ""};
}

const std::vector<std::string> kInvarianceCsvHeader{
    "method", "seed", "trials", "violations", "skipped", "redraws", "first_violation_trial"};

}  // namespace

// ---------------------------------------------------------------------------
// Problems

ProblemDocument parse_problem(std::string_view bytes, InputFormat format,
                              const ParseOptions& options) {
  return format == InputFormat::kCsv ? parse_csv(bytes, options) : parse_json(bytes, options);
}

std::string write_problem(const ProblemDocument& doc, InputFormat format) {
  const auto& m = doc.matrix;
  if (format == InputFormat::kJson) {
    Json meta = Json::object();
    for (const auto& [k, v] : doc.metadata) meta[k] = v;
    Json out{{"criteria", m.criteria()},
             {"alternatives", m.alternatives()},
             {"values", m.values().to_rows()},
             {"weights", std::vector<double>(doc.weights.values().begin(), doc.weights.values().end())},
             {"metadata", std::move(meta)}};
    return dump(out);
  }
  std::string out;
  for (const auto& [k, v] : doc.metadata) out += "# " + k + ": " + v + "\n";
  std::vector<std::string> header{"alternative"};
  header.insert(header.end(), m.criteria().begin(), m.criteria().end());
  out += csv_line(header);
  for (std::size_t i = 0; i < m.num_alternatives(); ++i) {
    std::vector<std::string> row{m.alternatives()[i]};
    for (double v : m.values().row(i)) row.push_back(shortest(v));
    out += csv_line(row);
  }
  std::vector<std::string> wrow{"weights"};
  for (double w : doc.weights.values()) wrow.push_back(shortest(w));
  return out + csv_line(wrow);
}

// ---------------------------------------------------------------------------
// Aggregation results

std::string write_result(const AggregationResult& result, OutputFormat format) {
  const auto& sv = result.score_vector;
  const auto& labels = result.alternatives;
  switch (format) {
    case OutputFormat::kJson: {
      Json out{{"method", method_name(sv.method)},
               {"direction", direction_name(sv.direction)},
               {"alternatives", labels},
               {"criteria", result.criteria},
               {"weights", result.weights}};
      out["z_scores"] = result.z_scores ? Json(result.z_scores->to_rows()) : Json(nullptr);
      out["scores"] = sv.scores;
      if (result.scaled) {
        out["scaled"] = result.scaled->values;
        out["all_tied"] = result.scaled->all_tied;
      } else {
        out["scaled"] = nullptr;
        out["all_tied"] = nullptr;
      }
      out["ranking"] = ranking_json(result.ranking, labels);
      out["warnings"] = result.warnings;
      return dump(out);
    }
    case OutputFormat::kCsv: {
      std::string out = csv_line({"alternative", std::string(method_name(sv.method)), "scaled", "rank"});
      for (std::size_t i = 0; i < labels.size(); ++i) {
        out += csv_line({labels[i], shortest(sv.scores[i]),
                         result.scaled ? shortest(result.scaled->values[i]) : "",
                         std::to_string(result.ranking.dense_ranks[i])});
      }
      return out;
    }
    case OutputFormat::kText: {
      std::string out;
      if (result.z_scores) {
        std::vector<std::vector<std::string>> z{{"z-scores"}};
        z[0].insert(z[0].end(), result.criteria.begin(), result.criteria.end());
        for (std::size_t i = 0; i < labels.size(); ++i) {
          std::vector<std::string> row{labels[i]};
          for (double v : result.z_scores->row(i)) row.push_back(format_fixed(v, 4));
          z.push_back(std::move(row));
        }
        std::vector<std::string> wrow{"w"};
        for (double w : result.weights) wrow.push_back(shortest(w));
        z.push_back(std::move(wrow));
        out += render_table(z) + "\n";
      }
      std::vector<std::vector<std::string>> rows{{"Alternative", std::string(method_symbol(sv.method))}};
      if (result.scaled) rows[0].push_back("scaled [0-100]");
      rows[0].push_back("Rank");
      for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<std::string> row{labels[i], format_fixed(sv.scores[i], 5)};
        if (result.scaled) row.push_back(format_fixed(result.scaled->values[i], 0));
        row.push_back(std::to_string(result.ranking.dense_ranks[i]));
        rows.push_back(std::move(row));
      }
      out += render_table(rows);
      out += "\nRanking: " + format_ordering(result.ranking, labels) + "\n";
      for (const auto& w : result.warnings) out += "warning: " + w + "\n";
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Method comparison

std::string write_result(const ComparisonReport& report, OutputFormat format) {
  const auto& labels = report.alternatives;
  switch (format) {
    case OutputFormat::kJson: {
      Json methods = Json::array();
      for (const auto& o : report.outcomes) {
        Json m{{"method", method_name(o.method)}, {"direction", direction_name(direction_of(o.method))}};
        if (o.scores) {
          m["scores"] = o.scores->scores;
          m["ranking"] = ranking_json(*o.ranking, labels);
          m["error"] = nullptr;
        } else {
          m["scores"] = nullptr;
          m["ranking"] = nullptr;
          m["error"] = o.error;
        }
        methods.push_back(std::move(m));
      }
      Json agreement = Json::array();
      for (const auto& a : report.agreement) {
        agreement.push_back(Json{{"first", method_name(a.first)},
                                 {"second", method_name(a.second)},
                                 {"agree", a.agree}});
      }
      return dump(Json{{"alternatives", labels},
                       {"methods", std::move(methods)},
                       {"rank_table", report.rank_table},
                       {"agreement", std::move(agreement)}});
    }
    case OutputFormat::kCsv: {
      std::vector<std::string> header{"alternative"};
      for (const auto& o : report.outcomes) header.emplace_back(method_name(o.method));
      std::string out = csv_line(header);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<std::string> row{labels[i]};
        for (std::size_t m = 0; m < report.outcomes.size(); ++m) {
          const int r = report.rank_table[i][m];
          row.push_back(r > 0 ? std::to_string(r) : "");
        }
        out += csv_line(row);
      }
      return out;
    }
    case OutputFormat::kText: {
      std::vector<std::vector<std::string>> scores{{"Scores"}};
      std::vector<std::vector<std::string>> ranks{{"Ranks"}};
      for (const auto& o : report.outcomes) {
        scores[0].emplace_back(method_symbol(o.method));
        ranks[0].emplace_back(method_symbol(o.method));
      }
      for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<std::string> srow{labels[i]};
        std::vector<std::string> rrow{labels[i]};
        for (std::size_t m = 0; m < report.outcomes.size(); ++m) {
          const auto& o = report.outcomes[m];
          srow.push_back(o.scores ? format_fixed(o.scores->scores[i], 5) : "-");
          rrow.push_back(report.rank_table[i][m] > 0 ? std::to_string(report.rank_table[i][m]) : "-");
        }
        scores.push_back(std::move(srow));
        ranks.push_back(std::move(rrow));
      }
      std::string out = render_table(scores) + "\n" + render_table(ranks) + "\n";
      std::vector<std::vector<std::string>> orderings;
      for (const auto& o : report.outcomes) {
        const std::string best = direction_of(o.method) == Direction::kHigherBetter
                                     ? "(highest is best)"
                                     : "(lowest is best)";
        orderings.push_back({"  " + std::string(method_symbol(o.method)),
                             o.ranking ? format_ordering(*o.ranking, labels) + "  " + best
                                       : "error: " + o.error});
      }
      out += "Orderings:\n";
      for (const auto& row : orderings) {
        std::size_t pad = 0;
        for (const auto& r : orderings) pad = std::max(pad, r[0].size());
        out += row[0] + std::string(pad - row[0].size() + 2, ' ') + row[1] + "\n";
      }
      if (!report.agreement.empty()) {
        out += "Agreement:\n";
        for (const auto& a : report.agreement) {
          out += "  " + std::string(method_symbol(a.first)) + " vs " +
                 std::string(method_symbol(a.second)) + ": " + (a.agree ? "yes" : "no") + "\n";
        }
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Invariance trials

std::string write_result(const InvarianceReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return dump(invariance_json(report));
    case OutputFormat::kCsv:
      return csv_line(kInvarianceCsvHeader) + csv_line(invariance_csv_row(report));
    case OutputFormat::kText: return invariance_text(report);
  }
  return {};
}

std::string write_result(const std::vector<InvarianceReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json out = Json::array();
      for (const auto& r : reports) out.push_back(invariance_json(r));
      return dump(out);
    }
    case OutputFormat::kCsv: {
      std::string out = csv_line(kInvarianceCsvHeader);
      for (const auto& r : reports) out += csv_line(invariance_csv_row(r));
      return out;
    }
    case OutputFormat::kText: {
      std::string out;
      for (std::size_t k = 0; k < reports.size(); ++k) {
        if (k > 0) out += "\n";
        out += invariance_text(reports[k]);
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Comparability and equilibrium

std::string write_result(const ComparabilityReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return dump(comparability_json(report));
    case OutputFormat::kCsv: {
      std::string out = csv_line({"criterion", "min", "max", "range"});
      for (std::size_t j = 0; j < report.criteria.size(); ++j) {
        const auto& r = report.per_criterion[j];
        out += csv_line({report.criteria[j], shortest(r.min), shortest(r.max), shortest(r.range)});
      }
      return out;
    }
    case OutputFormat::kText: return comparability_text(report);
  }
  return {};
}

std::string write_result(const CheckReport& report, OutputFormat format) {
  const auto& eq = report.equilibrium;
  switch (format) {
    case OutputFormat::kJson: {
      Json out = comparability_json(report.comparability);
      out["equilibrium"] = Json{{"horizontal", eq.horizontal},
                                {"vertical", eq.vertical},
                                {"max_horizontal", eq.max_horizontal},
                                {"max_vertical", eq.max_vertical}};
      return dump(out);
    }
    case OutputFormat::kCsv: {
      std::string out = write_result(report.comparability, OutputFormat::kCsv);
      out += csv_line({"max_horizontal_residual", shortest(eq.max_horizontal)});
      out += csv_line({"max_vertical_residual", shortest(eq.max_vertical)});
      return out;
    }
    case OutputFormat::kText: {
      std::string out = comparability_text(report.comparability);
      out += "equilibrium residuals:\n";
      out += render_table({{"  max |horizontal|", exponent(eq.max_horizontal)},
                           {"  max |vertical|", exponent(eq.max_vertical)}});
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Plot data

PlotData emit_plot_data(const PreferenceMatrix& matrix, const WeightVector& w,
                        DegeneratePolicy policy) {
  if (w.size() != matrix.num_criteria()) {
    throw DimensionMismatch("weight count does not match criterion count");
  }
  const ZMatrix z = z_normalize(matrix, policy);
  PlotData data;
  bool first = true;
  auto extend = [&](double v) {
    data.z_min = first ? v : std::min(data.z_min, v);
    data.z_max = first ? v : std::max(data.z_max, v);
    first = false;
  };
  for (std::size_t i = 0; i < matrix.num_alternatives(); ++i) {
    PlotSeries series{matrix.alternatives()[i], {}, centroid(z.values().row(i), w)};
    for (std::size_t j = 0; j < matrix.num_criteria(); ++j) {
      series.points.push_back({matrix.criteria()[j], z(i, j), w[j]});
      extend(z(i, j));
    }
    extend(series.pstar);
    data.series.push_back(std::move(series));
  }
  return data;
}

std::string write_plot_data(const PlotData& data) {
  Json series = Json::array();
  for (const auto& s : data.series) {
    Json points = Json::array();
    for (const auto& p : s.points) {
      points.push_back(Json{{"criterion", p.criterion}, {"z", p.z}, {"weight", p.weight}});
    }
    series.push_back(Json{{"alternative", s.alternative}, {"pstar", s.pstar}, {"points", std::move(points)}});
  }
  return dump(Json{{"z_range", Json::array({data.z_min, data.z_max})}, {"series", std::move(series)}});
}

}  // namespace pfm
