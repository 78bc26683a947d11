#include "pfm/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "pfm/errors.hpp"

namespace pfm {

namespace {

void require_weights(std::size_t criteria, const WeightVector& w) {
  if (criteria != w.size()) {
    throw DimensionMismatch("problem has " + std::to_string(criteria) + " criteria but " +
                            std::to_string(w.size()) + " weights");
  }
}

template <typename RowTerm>
ScoreVector weighted_sum(Method method, const Grid& grid, const WeightVector& w, RowTerm term) {
  require_weights(grid.cols(), w);
  std::vector<double> scores(grid.rows(), 0.0);
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    for (std::size_t j = 0; j < grid.cols(); ++j) scores[i] += w[j] * term(grid(i, j));
  }
  return ScoreVector(method, std::move(scores));
}

}  // namespace

ScoreVector wam(const PreferenceMatrix& matrix, const WeightVector& w) {
  return weighted_sum(Method::kWam, matrix.values(), w, [](double p) { return std::abs(p); });
}

ScoreVector wgm(const PreferenceMatrix& matrix, const WeightVector& w) {
  require_weights(matrix.num_criteria(), w);
  const auto& grid = matrix.values();
  std::vector<double> scores(grid.rows(), 1.0);
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    for (std::size_t j = 0; j < grid.cols(); ++j) {
      if (w[j] == 0.0) continue;  // 0^0 counts as 1
      scores[i] *= std::pow(std::abs(grid(i, j)), w[j]);
    }
  }
  return ScoreVector(Method::kWgm, std::move(scores));
}

KMatrix k_scores(const PreferenceMatrix& matrix) {
  const auto& grid = matrix.values();
  Grid k(grid.rows(), grid.cols());
  for (std::size_t j = 0; j < grid.cols(); ++j) {
    double lo = grid(0, j);
    double hi = grid(0, j);
    for (std::size_t i = 1; i < grid.rows(); ++i) {
      lo = std::min(lo, grid(i, j));
      hi = std::max(hi, grid(i, j));
    }
    if (!(hi > lo)) throw DegenerateCriterion(j, matrix.criteria()[j]);
    const double range = hi - lo;
    // x/x is exactly 1 in IEEE arithmetic, so the extremes land on 0 and 1.
    for (std::size_t i = 0; i < grid.rows(); ++i) k(i, j) = (grid(i, j) - lo) / range;
  }
  return KMatrix(std::move(k));
}

ScoreVector k_centroid(const PreferenceMatrix& matrix, const WeightVector& w) {
  require_weights(matrix.num_criteria(), w);
  const KMatrix k = k_scores(matrix);
  return weighted_sum(Method::kKCentroid, k.values(), w, [](double v) { return v; });
}

ScoreVector dist_euclid(const Grid& z, const WeightVector& w) {
  return weighted_sum(Method::kDEuclid, z, w, [](double v) { return (v - 1.0) * (v - 1.0); });
}

ScoreVector dist_euclid(const ZMatrix& z, const WeightVector& w) {
  return dist_euclid(z.values(), w);
}

ScoreVector dist_manhattan(const Grid& z, const WeightVector& w) {
  return weighted_sum(Method::kDManhattan, z, w, [](double v) { return std::abs(v - 1.0); });
}

ScoreVector dist_manhattan(const ZMatrix& z, const WeightVector& w) {
  return dist_manhattan(z.values(), w);
}

}  // namespace pfm
