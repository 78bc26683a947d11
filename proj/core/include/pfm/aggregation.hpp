#pragma once

// Weighted-centroid aggregation P*(z) in the Linear Preference Space, its
// min-max presentation scale and argmax ranking with tie groups.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfm/core.hpp"

namespace pfm {

enum class Method { kPStar, kWam, kWgm, kKCentroid, kDEuclid, kDManhattan };

enum class Direction { kHigherBetter, kLowerBetter };

/// All methods in canonical order.
inline constexpr Method kAllMethods[] = {Method::kPStar,     Method::kWam,
                                         Method::kWgm,       Method::kKCentroid,
                                         Method::kDEuclid,   Method::kDManhattan};

/// CLI/serialization name: pstar, wam, wgm, kcentroid, euclid, manhattan.
std::string_view method_name(Method method);
/// Column heading used in text tables: P*, WAM, WGM, Pi*(k), D^E, D^M.
std::string_view method_symbol(Method method);
std::optional<Method> parse_method(std::string_view name);
/// Distance-to-ideal methods are lower-is-better; everything else higher-is-better.
Direction direction_of(Method method);

/// Per-alternative aggregated scores produced by one method.
struct ScoreVector {
  ScoreVector(Method m, std::vector<double> s)
      : method(m), direction(direction_of(m)), scores(std::move(s)) {}

  Method method;
  Direction direction;
  std::vector<double> scores;
};

/// Ordering of alternatives, best first. Alternatives whose scores chain
/// together within the tie tolerance share a group and a dense rank.
struct Ranking {
  std::vector<std::vector<std::size_t>> tie_groups;
  std::vector<int> dense_ranks;  ///< 1 = best; ties share; no gaps

  bool same_order(const Ranking& other) const { return tie_groups == other.tie_groups; }
  friend bool operator==(const Ranking&, const Ranking&) = default;
};

struct ScaledScores {
  std::vector<double> values;
  bool all_tied = false;
};

struct AggregationResult {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<double> weights;
  std::optional<Grid> z_scores;  ///< the LPS coordinates behind z-based scores
  ScoreVector score_vector;
  std::optional<ScaledScores> scaled;
  Ranking ranking;
  std::vector<std::string> warnings;
};

struct RankOptions {
  double tie_tolerance = kScoreTolerance;
  DegeneratePolicy policy = DegeneratePolicy::kReject;
};

/// Σ_j w_j x_j. Lengths must match (DimensionMismatch).
double centroid(std::span<const double> points, const WeightVector& w);

/// P*_i = Σ_j w_j z_ij.
ScoreVector weighted_centroid(const ZMatrix& z, const WeightVector& w);

/// Σ_j w_j (z_j - F)^2. Only meaningful as the objective whose argmin over F
/// is the weighted centroid; the value itself carries no preference meaning.
double wlsd_objective(std::span<const double> z_row, const WeightVector& w, double F);

/// Linear rescale onto [lo, hi]. When the score spread is within the tie
/// tolerance every value becomes the midpoint and all_tied is set.
ScaledScores minmax_scale(const ScoreVector& scores, double lo = 0.0, double hi = 100.0,
                          double tie_tolerance = kScoreTolerance);

/// Sorts by score in the method's direction. Ties are chained transitively:
/// neighbours in sorted order within tie_tolerance fall in one group. Inside a
/// group indices keep input order.
Ranking rank(const ScoreVector& scores, double tie_tolerance = kScoreTolerance);

/// z_normalize -> weighted_centroid -> minmax_scale -> rank.
AggregationResult rank_pstar(const PreferenceMatrix& matrix, const WeightVector& w,
                             const RankOptions& options = {});

/// Human-readable order such as "A1 > A2 = A3 > A4".
std::string format_ordering(const Ranking& ranking, const std::vector<std::string>& labels);

}  // namespace pfm
