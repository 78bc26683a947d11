#pragma once

// Rival aggregators that P*(z) is compared against. They are implemented as
// commonly defined so their axiom violations can be reproduced, not fixed.

#include "pfm/aggregation.hpp"
#include "pfm/core.hpp"

namespace pfm {

/// Per-criterion min-max positions k_ij = (p_ij - p_min,j) / (p_max,j - p_min,j).
/// Every column spans exactly [0, 1].
class KMatrix {
 public:
  explicit KMatrix(Grid values) : values_(std::move(values)) {}

  const Grid& values() const noexcept { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

 private:
  Grid values_;
};

/// Σ_j w_j |p_ij|. Uses absolute values even for negative scores.
ScoreVector wam(const PreferenceMatrix& matrix, const WeightVector& w);

/// Π_j |p_ij|^w_j. A zero score on a positively weighted criterion gives 0;
/// zero-weighted criteria contribute a factor of 1.
ScoreVector wgm(const PreferenceMatrix& matrix, const WeightVector& w);

/// Throws DegenerateCriterion for a constant column.
KMatrix k_scores(const PreferenceMatrix& matrix);

/// Π*_i(k) = Σ_j w_j k_ij.
ScoreVector k_centroid(const PreferenceMatrix& matrix, const WeightVector& w);

/// Σ_j w_j (z_ij - 1)^2, lower is better. The ideal point is 1 on every criterion.
ScoreVector dist_euclid(const ZMatrix& z, const WeightVector& w);
/// Same, on a grid of z-scores that did not come from z_normalize.
ScoreVector dist_euclid(const Grid& z, const WeightVector& w);

/// Σ_j w_j |z_ij - 1|, lower is better.
ScoreVector dist_manhattan(const ZMatrix& z, const WeightVector& w);
ScoreVector dist_manhattan(const Grid& z, const WeightVector& w);

}  // namespace pfm
