#pragma once

// Domain types of a decision problem and the Linear Preference Space (LPS)
// construction: per-criterion z-normalization, affine maps and k-ratios.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pfm {

/// Absolute tolerance used for every equality check on scores.
inline constexpr double kScoreTolerance = 1e-9;

/// Dense row-major I×J grid of reals. Row i is an alternative, column j a criterion.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Builds from nested rows; throws DimensionMismatch on ragged input.
  static Grid from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<double> column(std::size_t j) const;
  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Raw preference scores p_ij for I alternatives on J criteria.
///
/// Invariants (checked on construction, ValidationError otherwise):
/// I >= 2, J >= 1, every score finite, labels unique and non-empty per axis.
class PreferenceMatrix {
 public:
  PreferenceMatrix(std::vector<std::string> alternatives, std::vector<std::string> criteria,
                   Grid values);

  std::size_t num_alternatives() const noexcept { return values_.rows(); }
  std::size_t num_criteria() const noexcept { return values_.cols(); }

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  const Grid& values() const noexcept { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

  friend bool operator==(const PreferenceMatrix&, const PreferenceMatrix&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<std::string> criteria_;
  Grid values_;
};

/// Non-negative criterion weights summing to 1 (within 1e-9).
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  /// Rescales non-negative weights with a positive sum so they sum to 1.
  static WeightVector normalized(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t j) const { return weights_[j]; }
  std::span<const double> values() const noexcept { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

/// p' = slope * p + intercept with slope > 0. Maps of this class preserve
/// every ratio of preference differences.
class AffineMap {
 public:
  AffineMap() = default;
  /// Throws InvalidAffine unless slope > 0 and both coefficients are finite.
  AffineMap(double slope, double intercept);

  double slope() const noexcept { return slope_; }
  double intercept() const noexcept { return intercept_; }
  double operator()(double p) const noexcept { return slope_ * p + intercept_; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  double slope_ = 1.0;
  double intercept_ = 0.0;
};

/// Per-criterion mean and population standard deviation of the raw scores.
struct NormalizationParams {
  std::vector<double> means;
  std::vector<double> stddevs;
};

/// What to do with a criterion whose scores are all equal (σ_j = 0).
enum class DegeneratePolicy {
  kReject,  ///< throw DegenerateCriterion
  kZero,    ///< emit an all-zero z column and record the criterion
};

/// z-scores z_ij = (p_ij - μ_j) / σ_j. Every non-degenerate column has
/// mean 0 and population σ 1.
class ZMatrix {
 public:
  ZMatrix(Grid values, NormalizationParams params, std::vector<std::size_t> zeroed = {})
      : values_(std::move(values)), params_(std::move(params)), zeroed_(std::move(zeroed)) {}

  std::size_t num_alternatives() const noexcept { return values_.rows(); }
  std::size_t num_criteria() const noexcept { return values_.cols(); }
  const Grid& values() const noexcept { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  const NormalizationParams& params() const noexcept { return params_; }
  /// Criteria zeroed under DegeneratePolicy::kZero, ascending.
  const std::vector<std::size_t>& zeroed_criteria() const noexcept { return zeroed_; }

 private:
  Grid values_;
  NormalizationParams params_;
  std::vector<std::size_t> zeroed_;
};

/// Arithmetic mean and population standard deviation (divide by I) per column.
NormalizationParams column_stats(const PreferenceMatrix& matrix);

ZMatrix z_normalize(const PreferenceMatrix& matrix,
                    DegeneratePolicy policy = DegeneratePolicy::kReject);

/// The z-transform of one criterion as an affine map: a = 1/σ, b = -μ/σ.
/// Throws DegenerateCriterion when σ = 0.
AffineMap normalization_as_affine(const NormalizationParams& params, std::size_t criterion);

/// Applies maps[j] to every score of criterion j.
PreferenceMatrix apply_affine(const PreferenceMatrix& matrix, std::span<const AffineMap> maps);

/// (pa - pb) / (pc - pd). Throws ZeroDenominator when
/// |pc - pd| <= 1e-12 * max(1, |pc|, |pd|).
double k_ratio(double pa, double pb, double pc, double pd);

}  // namespace pfm
