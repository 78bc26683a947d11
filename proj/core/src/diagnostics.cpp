#include "pfm/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "pfm/baselines.hpp"
#include "pfm/errors.hpp"

namespace pfm {

ComparabilityReport comparability_check(const PreferenceMatrix& matrix) {
  ComparabilityReport report;
  report.criteria = matrix.criteria();
  const auto& grid = matrix.values();
  for (std::size_t j = 0; j < grid.cols(); ++j) {
    const auto col = grid.column(j);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    report.per_criterion.push_back({*lo, *hi, *hi - *lo});
  }
  for (std::size_t j = 0; j < grid.cols(); ++j) {
    for (std::size_t k = j + 1; k < grid.cols(); ++k) {
      const auto& a = report.per_criterion[j];
      const auto& b = report.per_criterion[k];
      if (std::abs(a.min - b.min) > kScoreTolerance || std::abs(a.max - b.max) > kScoreTolerance) {
        report.violating_pairs.emplace_back(j, k);
      }
    }
  }
  report.comparable = report.violating_pairs.empty();
  return report;
}

ScoreVector evaluate_method(Method method, const PreferenceMatrix& matrix, const WeightVector& w,
                            DegeneratePolicy policy, const ZMatrix* shared_z) {
  auto z_of = [&]() { return shared_z ? *shared_z : z_normalize(matrix, policy); };
  switch (method) {
    case Method::kPStar: {
      if (w.size() != matrix.num_criteria()) {
        throw DimensionMismatch("weight count does not match criterion count");
      }
      return weighted_centroid(z_of(), w);
    }
    case Method::kWam: return wam(matrix, w);
    case Method::kWgm: return wgm(matrix, w);
    case Method::kKCentroid: return k_centroid(matrix, w);
    case Method::kDEuclid: return dist_euclid(z_of(), w);
    case Method::kDManhattan: return dist_manhattan(z_of(), w);
  }
  throw Error("unknown aggregation method");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TrialMapGenerator::TrialMapGenerator(std::uint64_t seed, std::uint64_t trial)
    : engine_(splitmix64(seed ^ splitmix64(trial))) {}

double TrialMapGenerator::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<AffineMap> TrialMapGenerator::draw(std::size_t criteria) {
  static const double kLogLo = std::log(1e-3);
  static const double kLogHi = std::log(1e3);
  std::vector<AffineMap> maps;
  maps.reserve(criteria);
  for (std::size_t j = 0; j < criteria; ++j) {
    const double slope = std::exp(kLogLo + uniform() * (kLogHi - kLogLo));
    const double intercept = -1e4 + uniform() * 2e4;
    maps.emplace_back(slope, intercept);
  }
  return maps;
}

Ranking rank_method(Method method, const PreferenceMatrix& matrix, const WeightVector& w,
                    const TrialOptions& options) {
  return rank(evaluate_method(method, matrix, w, options.policy), options.tie_tolerance);
}

InvarianceReport invariance_trial(const PreferenceMatrix& matrix, const WeightVector& w,
                                  Method method, std::size_t trials, std::uint64_t seed,
                                  const TrialOptions& options) {
  if (trials < 1) throw ValidationError("at least one trial is required");
  InvarianceReport report;
  report.method = method;
  report.alternatives = matrix.alternatives();
  report.seed = seed;
  report.trials = trials;

  const Ranking before = rank_method(method, matrix, w, options);
  for (std::size_t t = 0; t < trials; ++t) {
    TrialMapGenerator gen(seed, t);
    bool done = false;
    for (std::size_t attempt = 0; attempt <= options.max_redraws && !done; ++attempt) {
      auto maps = gen.draw(matrix.num_criteria());
      Ranking after;
      try {
        after = rank_method(method, apply_affine(matrix, maps), w, options);
      } catch (const InputError&) {
        if (attempt < options.max_redraws) ++report.redraws;
        continue;
      }
      done = true;
      if (!after.same_order(before)) {
        ++report.violations;
        if (!report.first_counterexample) {
          report.first_counterexample = Counterexample{t, matrix, std::move(maps), before, after};
        }
      }
    }
    if (!done) ++report.skipped;
  }
  return report;
}

EquilibriumReport equilibrium_check(const ZMatrix& z, const WeightVector& w,
                                    const ScoreVector& pstar) {
  if (pstar.scores.size() != z.num_alternatives() || w.size() != z.num_criteria()) {
    throw DimensionMismatch("equilibrium check inputs disagree in shape");
  }
  EquilibriumReport report;
  const auto& grid = z.values();
  report.horizontal.resize(grid.rows());
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < grid.cols(); ++j) r += w[j] * (grid(i, j) - pstar.scores[i]);
    report.horizontal[i] = r;
    report.max_horizontal = std::max(report.max_horizontal, std::abs(r));
  }
  report.vertical.resize(grid.cols());
  for (std::size_t j = 0; j < grid.cols(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.rows(); ++i) sum += grid(i, j);
    report.vertical[j] = sum / static_cast<double>(grid.rows());
    report.max_vertical = std::max(report.max_vertical, std::abs(report.vertical[j]));
  }
  return report;
}

double beam_equilibrium(std::span<const double> positions, std::span<const double> masses) {
  if (positions.size() != masses.size() || positions.empty()) {
    throw DimensionMismatch("beam needs one mass per position");
  }
  double moment = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    moment += masses[j] * positions[j];
    total += masses[j];
  }
  if (!(total > 0.0)) throw ValidationError("beam masses must have a positive total");
  return moment / total;
}

ComparisonReport compare_methods(const PreferenceMatrix& matrix, const WeightVector& w,
                                 std::span<const Method> methods, const RankOptions& options) {
  if (methods.empty()) throw ValidationError("at least one method is required");
  ComparisonReport report;
  report.alternatives = matrix.alternatives();

  std::optional<ZMatrix> z;
  std::string z_error;
  try {
    z = z_normalize(matrix, options.policy);
  } catch (const InputError& e) {
    z_error = e.what();
  }

  for (Method m : methods) {
    MethodOutcome outcome{m, std::nullopt, std::nullopt, {}};
    const bool z_based = m == Method::kPStar || m == Method::kDEuclid || m == Method::kDManhattan;
    try {
      if (z_based && !z) throw ValidationError(z_error);
      outcome.scores = evaluate_method(m, matrix, w, options.policy, z ? &*z : nullptr);
      outcome.ranking = rank(*outcome.scores, options.tie_tolerance);
    } catch (const InputError& e) {
      outcome.scores.reset();
      outcome.error = e.what();
    }
    report.outcomes.push_back(std::move(outcome));
  }

  report.rank_table.assign(matrix.num_alternatives(),
                           std::vector<int>(report.outcomes.size(), 0));
  for (std::size_t m = 0; m < report.outcomes.size(); ++m) {
    const auto& ranking = report.outcomes[m].ranking;
    if (!ranking) continue;
    for (std::size_t i = 0; i < matrix.num_alternatives(); ++i) {
      report.rank_table[i][m] = ranking->dense_ranks[i];
    }
  }
  for (std::size_t a = 0; a < report.outcomes.size(); ++a) {
    for (std::size_t b = a + 1; b < report.outcomes.size(); ++b) {
      const auto& ra = report.outcomes[a].ranking;
      const auto& rb = report.outcomes[b].ranking;
      if (!ra || !rb) continue;
      report.agreement.push_back(
          {report.outcomes[a].method, report.outcomes[b].method, ra->same_order(*rb)});
    }
  }
  return report;
}

CheckReport check_problem(const PreferenceMatrix& matrix, const WeightVector& w,
                          DegeneratePolicy policy) {
  const ZMatrix z = z_normalize(matrix, policy);
  const ScoreVector pstar = weighted_centroid(z, w);
  return CheckReport{comparability_check(matrix), equilibrium_check(z, w, pstar)};
}

}  // namespace pfm
