#pragma once

// Executable checks of the aggregation axioms: scale comparability,
// seeded affine-invariance fuzzing, barycentre equilibrium and side-by-side
// method comparison.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfm/aggregation.hpp"
#include "pfm/core.hpp"

namespace pfm {

struct CriterionRange {
  double min = 0.0;
  double max = 0.0;
  double range = 0.0;
};

struct ComparabilityReport {
  std::vector<std::string> criteria;
  bool comparable = true;
  std::vector<CriterionRange> per_criterion;
  /// (j, k) with j < k whose minima or maxima differ by more than 1e-9.
  std::vector<std::pair<std::size_t, std::size_t>> violating_pairs;
};

/// All criteria must share the same raw minimum and maximum.
ComparabilityReport comparability_check(const PreferenceMatrix& matrix);

/// Scores of any method on a problem. z-based methods reuse `shared_z` when given.
ScoreVector evaluate_method(Method method, const PreferenceMatrix& matrix, const WeightVector& w,
                            DegeneratePolicy policy = DegeneratePolicy::kReject,
                            const ZMatrix* shared_z = nullptr);

/// Deterministic source of random affine maps for invariance trials.
///
/// Trial t of seed s uses a std::mt19937_64 seeded with
/// splitmix64(s ^ splitmix64(t)); each uniform double is the top 53 bits of
/// one draw times 2^-53. Per criterion the slope is log-uniform on
/// [1e-3, 1e3] (one draw) and the intercept uniform on [-1e4, 1e4] (one draw).
/// Redraws after a failed attempt continue the same stream.
class TrialMapGenerator {
 public:
  TrialMapGenerator(std::uint64_t seed, std::uint64_t trial);
  std::vector<AffineMap> draw(std::size_t criteria);
  double uniform();  ///< [0, 1)

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct Counterexample {
  std::size_t trial = 0;
  PreferenceMatrix matrix;  ///< the untransformed input
  std::vector<AffineMap> maps;
  Ranking before;
  Ranking after;
};

struct InvarianceReport {
  Method method = Method::kPStar;
  std::vector<std::string> alternatives;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;  ///< trials where every attempt threw
  std::size_t redraws = 0;  ///< failed attempts that were redrawn
  std::optional<Counterexample> first_counterexample;
};

struct TrialOptions {
  double tie_tolerance = kScoreTolerance;
  DegeneratePolicy policy = DegeneratePolicy::kReject;
  std::size_t max_redraws = 10;
};

/// Ranks the problem, then for each trial draws one affine map per criterion,
/// re-ranks the transformed problem and records a violation when the tie
/// groups differ. Errors on the untransformed problem propagate.
InvarianceReport invariance_trial(const PreferenceMatrix& matrix, const WeightVector& w,
                                  Method method, std::size_t trials, std::uint64_t seed,
                                  const TrialOptions& options = {});

/// Ranking of one method on one problem, used by the trials.
Ranking rank_method(Method method, const PreferenceMatrix& matrix, const WeightVector& w,
                    const TrialOptions& options = {});

struct EquilibriumReport {
  std::vector<double> horizontal;  ///< r_i = Σ_j w_j (z_ij - P*_i)
  std::vector<double> vertical;    ///< c_j = mean_i z_ij
  double max_horizontal = 0.0;
  double max_vertical = 0.0;
};

EquilibriumReport equilibrium_check(const ZMatrix& z, const WeightVector& w,
                                    const ScoreVector& pstar);

/// Balance point Σ m_j x_j / Σ m_j of point masses on a beam.
double beam_equilibrium(std::span<const double> positions, std::span<const double> masses);

struct MethodOutcome {
  Method method;
  std::optional<ScoreVector> scores;
  std::optional<Ranking> ranking;
  std::string error;  ///< set iff scores is empty
};

struct MethodAgreement {
  Method first;
  Method second;
  bool agree;
};

struct ComparisonReport {
  std::vector<std::string> alternatives;
  std::vector<MethodOutcome> outcomes;
  /// rank_table[i][m]: dense rank of alternative i under outcomes[m]; 0 if that method failed.
  std::vector<std::vector<int>> rank_table;
  /// Every pair of successful methods, in outcome order.
  std::vector<MethodAgreement> agreement;
};

ComparisonReport compare_methods(const PreferenceMatrix& matrix, const WeightVector& w,
                                 std::span<const Method> methods,
                                 const RankOptions& options = {});

/// Comparability plus equilibrium residuals, as reported by `pfm check`.
struct CheckReport {
  ComparabilityReport comparability;
  EquilibriumReport equilibrium;
};

CheckReport check_problem(const PreferenceMatrix& matrix, const WeightVector& w,
                          DegeneratePolicy policy = DegeneratePolicy::kReject);

}  // namespace pfm
