#include "pfm/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "pfm/errors.hpp"

namespace pfm {

Grid::Grid(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Grid Grid::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Grid grid(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " values, expected " +
                              std::to_string(cols));
    }
    std::copy(rows[i].begin(), rows[i].end(), grid.data_.begin() + i * cols);
  }
  return grid;
}

std::vector<double> Grid::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<std::vector<double>> Grid::to_rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

namespace {

void check_labels(const std::vector<std::string>& labels, const char* axis) {
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw ValidationError(std::string("empty ") + axis + " label");
    if (!seen.insert(label).second) {
      throw ValidationError(std::string("duplicate ") + axis + " label '" + label + "'");
    }
  }
}

}  // namespace

PreferenceMatrix::PreferenceMatrix(std::vector<std::string> alternatives,
                                   std::vector<std::string> criteria, Grid values)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      values_(std::move(values)) {
  if (values_.rows() != alternatives_.size() || values_.cols() != criteria_.size()) {
    throw DimensionMismatch("score grid is " + std::to_string(values_.rows()) + "x" +
                            std::to_string(values_.cols()) + " but labels describe " +
                            std::to_string(alternatives_.size()) + "x" +
                            std::to_string(criteria_.size()));
  }
  if (alternatives_.size() < 2) throw ValidationError("at least two alternatives are required");
  if (criteria_.empty()) throw ValidationError("at least one criterion is required");
  check_labels(alternatives_, "alternative");
  check_labels(criteria_, "criterion");
  for (std::size_t i = 0; i < values_.rows(); ++i) {
    for (std::size_t j = 0; j < values_.cols(); ++j) {
      if (!std::isfinite(values_(i, j))) {
        throw ValidationError("score of '" + alternatives_[i] + "' on '" + criteria_[j] +
                              "' is not finite");
      }
    }
  }
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ValidationError("weight vector is empty");
  double sum = 0.0;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (!std::isfinite(weights_[j]) || weights_[j] < 0.0) {
      throw ValidationError("weight " + std::to_string(j) + " must be finite and non-negative");
    }
    sum += weights_[j];
  }
  if (std::abs(sum - 1.0) > kScoreTolerance) {
    throw ValidationError("weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

WeightVector WeightVector::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ValidationError("weights must be finite and non-negative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) throw ValidationError("weights sum to zero");
  for (double& w : weights) w /= sum;
  return WeightVector(std::move(weights));
}

AffineMap::AffineMap(double slope, double intercept) : slope_(slope), intercept_(intercept) {
  if (!std::isfinite(slope) || !std::isfinite(intercept)) {
    throw InvalidAffine("affine map coefficients must be finite");
  }
  if (!(slope > 0.0)) {
    throw InvalidAffine("affine map slope must be strictly positive, got " +
                        std::to_string(slope));
  }
}

NormalizationParams column_stats(const PreferenceMatrix& matrix) {
  const auto& grid = matrix.values();
  const auto n = static_cast<double>(grid.rows());
  NormalizationParams params;
  params.means.resize(grid.cols());
  params.stddevs.resize(grid.cols());
  for (std::size_t j = 0; j < grid.cols(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.rows(); ++i) sum += grid(i, j);
    const double mean = sum / n;
    // Corrected two-pass: stable under large offsets such as intercepts of 1e4.
    double ss = 0.0, residual = 0.0;
    for (std::size_t i = 0; i < grid.rows(); ++i) {
      const double d = grid(i, j) - mean;
      ss += d * d;
      residual += d;
    }
    params.means[j] = mean;
    params.stddevs[j] = std::sqrt(std::max(0.0, ss - residual * residual / n) / n);
  }
  return params;
}

ZMatrix z_normalize(const PreferenceMatrix& matrix, DegeneratePolicy policy) {
  auto params = column_stats(matrix);
  const auto& raw = matrix.values();
  Grid z(raw.rows(), raw.cols());
  std::vector<std::size_t> zeroed;
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    const double mean = params.means[j];
    const double sd = params.stddevs[j];
    if (!(sd > 0.0)) {
      if (policy == DegeneratePolicy::kReject) {
        throw DegenerateCriterion(j, matrix.criteria()[j]);
      }
      zeroed.push_back(j);
      continue;  // column stays 0
    }
    // The rounded mean can sit half an ulp off centre, which matters when the
    // spread is tiny next to the offset. Re-centre the exact deviations.
    double residual = 0.0;
    for (std::size_t i = 0; i < raw.rows(); ++i) residual += raw(i, j) - mean;
    residual /= static_cast<double>(raw.rows());
    for (std::size_t i = 0; i < raw.rows(); ++i) z(i, j) = ((raw(i, j) - mean) - residual) / sd;
  }
  return ZMatrix(std::move(z), std::move(params), std::move(zeroed));
}

AffineMap normalization_as_affine(const NormalizationParams& params, std::size_t criterion) {
  if (criterion >= params.stddevs.size() || criterion >= params.means.size()) {
    throw DimensionMismatch("criterion index " + std::to_string(criterion) + " out of range");
  }
  const double sd = params.stddevs[criterion];
  if (!(sd > 0.0)) throw DegenerateCriterion(criterion, "#" + std::to_string(criterion));
  return AffineMap(1.0 / sd, -params.means[criterion] / sd);
}

PreferenceMatrix apply_affine(const PreferenceMatrix& matrix, std::span<const AffineMap> maps) {
  if (maps.size() != matrix.num_criteria()) {
    throw DimensionMismatch("expected " + std::to_string(matrix.num_criteria()) +
                            " affine maps, got " + std::to_string(maps.size()));
  }
  Grid out = matrix.values();
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = maps[j](out(i, j));
  }
  return PreferenceMatrix(matrix.alternatives(), matrix.criteria(), std::move(out));
}

double k_ratio(double pa, double pb, double pc, double pd) {
  const double denom = pc - pd;
  const double scale = std::max({1.0, std::abs(pc), std::abs(pd)});
  if (std::abs(denom) <= 1e-12 * scale) {
    throw ZeroDenominator("k-ratio denominator vanishes (pc == pd)");
  }
  return (pa - pb) / denom;
}

}  // namespace pfm
