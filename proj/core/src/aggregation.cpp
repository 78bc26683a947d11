#include "pfm/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pfm/errors.hpp"

namespace pfm {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kPStar: return "pstar";
    case Method::kWam: return "wam";
    case Method::kWgm: return "wgm";
    case Method::kKCentroid: return "kcentroid";
    case Method::kDEuclid: return "euclid";
    case Method::kDManhattan: return "manhattan";
  }
  return "unknown";
}

std::string_view method_symbol(Method method) {
  switch (method) {
    case Method::kPStar: return "P*";
    case Method::kWam: return "WAM";
    case Method::kWgm: return "WGM";
    case Method::kKCentroid: return "Pi*(k)";
    case Method::kDEuclid: return "D^E";
    case Method::kDManhattan: return "D^M";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

Direction direction_of(Method method) {
  return method == Method::kDEuclid || method == Method::kDManhattan ? Direction::kLowerBetter
                                                                      : Direction::kHigherBetter;
}

double centroid(std::span<const double> points, const WeightVector& w) {
  if (points.size() != w.size()) {
    throw DimensionMismatch("got " + std::to_string(points.size()) + " points for " +
                            std::to_string(w.size()) + " weights");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < points.size(); ++j) sum += w[j] * points[j];
  return sum;
}

ScoreVector weighted_centroid(const ZMatrix& z, const WeightVector& w) {
  std::vector<double> scores(z.num_alternatives());
  for (std::size_t i = 0; i < scores.size(); ++i) scores[i] = centroid(z.values().row(i), w);
  return ScoreVector(Method::kPStar, std::move(scores));
}

double wlsd_objective(std::span<const double> z_row, const WeightVector& w, double F) {
  if (z_row.size() != w.size()) {
    throw DimensionMismatch("z row has " + std::to_string(z_row.size()) + " entries for " +
                            std::to_string(w.size()) + " weights");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < z_row.size(); ++j) {
    const double d = z_row[j] - F;
    sum += w[j] * d * d;
  }
  return sum;
}

ScaledScores minmax_scale(const ScoreVector& scores, double lo, double hi,
                          double tie_tolerance) {
  if (!(lo < hi)) throw ValidationError("min-max target interval must satisfy lo < hi");
  ScaledScores out;
  const auto& s = scores.scores;
  if (s.empty()) return out;
  const auto [min_it, max_it] = std::minmax_element(s.begin(), s.end());
  const double min = *min_it;
  const double spread = *max_it - min;
  if (spread <= tie_tolerance) {
    out.values.assign(s.size(), 0.5 * (lo + hi));
    out.all_tied = true;
    return out;
  }
  out.values.reserve(s.size());
  for (double v : s) out.values.push_back((v - min) / spread * (hi - lo) + lo);
  return out;
}

Ranking rank(const ScoreVector& scores, double tie_tolerance) {
  const auto& s = scores.scores;
  for (double v : s) {
    if (!std::isfinite(v)) throw ValidationError("cannot rank a non-finite score");
  }
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  const bool higher = scores.direction == Direction::kHigherBetter;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return higher ? s[a] > s[b] : s[a] < s[b];
  });

  Ranking ranking;
  ranking.dense_ranks.assign(s.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const bool chained = k > 0 && std::abs(s[order[k]] - s[order[k - 1]]) <= tie_tolerance;
    if (!chained) ranking.tie_groups.emplace_back();
    ranking.tie_groups.back().push_back(order[k]);
  }
  int dense = 0;
  for (auto& group : ranking.tie_groups) {
    std::sort(group.begin(), group.end());
    ++dense;
    for (std::size_t idx : group) ranking.dense_ranks[idx] = dense;
  }
  return ranking;
}

AggregationResult rank_pstar(const PreferenceMatrix& matrix, const WeightVector& w,
                             const RankOptions& options) {
  if (w.size() != matrix.num_criteria()) {
    throw DimensionMismatch("problem has " + std::to_string(matrix.num_criteria()) +
                            " criteria but " + std::to_string(w.size()) + " weights");
  }
  const ZMatrix z = z_normalize(matrix, options.policy);
  ScoreVector pstar = weighted_centroid(z, w);
  ScaledScores scaled = minmax_scale(pstar, 0.0, 100.0, options.tie_tolerance);
  Ranking ranking = rank(pstar, options.tie_tolerance);

  std::vector<std::string> warnings;
  for (std::size_t j : z.zeroed_criteria()) {
    warnings.push_back("criterion '" + matrix.criteria()[j] +
                       "' has zero spread; its z-scores were set to 0");
  }
  if (scaled.all_tied) warnings.push_back("all alternatives are tied");
  return AggregationResult{matrix.alternatives(),
                           matrix.criteria(),
                           std::vector<double>(w.values().begin(), w.values().end()),
                           z.values(),
                           std::move(pstar),
                           std::move(scaled),
                           std::move(ranking),
                           std::move(warnings)};
}

std::string format_ordering(const Ranking& ranking, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t g = 0; g < ranking.tie_groups.size(); ++g) {
    if (g > 0) out += " > ";
    const auto& group = ranking.tie_groups[g];
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (k > 0) out += " = ";
      out += group[k] < labels.size() ? labels[group[k]] : std::to_string(group[k]);
    }
  }
  return out;
}

}  // namespace pfm
