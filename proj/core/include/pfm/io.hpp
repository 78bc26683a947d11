#pragma once

// On-disk problem formats (CSV, JSON) and serialization of every report.
//
// CSV problem layout: header row = corner cell then criterion labels; one row
// per alternative (label, scores...); a final row whose label is `weights`.
// Lines starting with '#' are comments; "# key: value" becomes metadata.
//
// JSON problem layout:
//   {"criteria": [...], "alternatives": [...], "values": [[...], ...],
//    "weights": [...], "metadata": {"title": "...", ...}}

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfm/aggregation.hpp"
#include "pfm/core.hpp"
#include "pfm/diagnostics.hpp"

namespace pfm {

enum class InputFormat { kCsv, kJson };
enum class OutputFormat { kText, kJson, kCsv };

std::optional<InputFormat> parse_input_format(std::string_view name);
std::optional<OutputFormat> parse_output_format(std::string_view name);

struct ProblemDocument {
  PreferenceMatrix matrix;
  WeightVector weights;
  std::map<std::string, std::string> metadata;
};

struct ParseOptions {
  /// Rescale weights to sum 1 instead of rejecting them.
  bool normalize_weights = false;
};

ProblemDocument parse_problem(std::string_view bytes, InputFormat format,
                              const ParseOptions& options = {});

/// Full-precision serialization that parse_problem reads back exactly.
std::string write_problem(const ProblemDocument& doc, InputFormat format);

// Text output rounds z to 4 dp and P* to 5 dp (round-half-even on the exact
// binary value); JSON keeps full precision. Every writer is deterministic.
std::string write_result(const AggregationResult& result, OutputFormat format);
std::string write_result(const ComparisonReport& report, OutputFormat format);
std::string write_result(const InvarianceReport& report, OutputFormat format);
std::string write_result(const std::vector<InvarianceReport>& reports, OutputFormat format);
std::string write_result(const ComparabilityReport& report, OutputFormat format);
std::string write_result(const CheckReport& report, OutputFormat format);

struct PlotPoint {
  std::string criterion;
  double z = 0.0;
  double weight = 0.0;
};

struct PlotSeries {
  std::string alternative;
  std::vector<PlotPoint> points;
  double pstar = 0.0;  ///< weighted centroid of points
};

struct PlotData {
  std::vector<PlotSeries> series;
  double z_min = 0.0;  ///< axis hint covering every point and barycentre
  double z_max = 0.0;
};

/// Per alternative, the z-points with their weights and the barycentre P*.
PlotData emit_plot_data(const PreferenceMatrix& matrix, const WeightVector& w,
                        DegeneratePolicy policy = DegeneratePolicy::kReject);
std::string write_plot_data(const PlotData& data);

/// Fixed-point rendering with round-half-even; never prints "-0".
std::string format_fixed(double value, int decimals);

}  // namespace pfm
