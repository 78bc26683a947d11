#pragma once

// Shared fixtures for the test binaries: the worked problems and a random
// problem generator that is independent of the library's trial RNG.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pfm/core.hpp"

namespace pfm::testing {

struct Problem {
  PreferenceMatrix matrix;
  WeightVector weights;
};

inline std::vector<std::string> labels(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

inline Problem make_problem(std::vector<std::vector<double>> rows, std::vector<double> w,
                            std::vector<std::string> alternatives = {},
                            std::vector<std::string> criteria = {}) {
  if (alternatives.empty()) alternatives = labels("A", rows.size());
  if (criteria.empty()) criteria = labels("C", rows.front().size());
  return {PreferenceMatrix(std::move(alternatives), std::move(criteria), Grid::from_rows(rows)),
          WeightVector(std::move(w))};
}

inline Problem demo() {
  return make_problem({{100, 0, 90}, {0, 100, 100}, {20, 45, 55}, {85, 60, 0}}, {0.4, 0.1, 0.5});
}

inline Problem demo_fail() {
  return make_problem({{80, 0, 24}, {0, 100, 68}, {30, 45, 55}, {95, 60, 0}}, {0.4, 0.1, 0.5});
}

inline Problem job_eur() {
  return make_problem({{15, 50000}, {20, 45000}}, {0.6, 0.4}, {"A", "B"}, {"growth", "salary"});
}

inline Problem job_kusd() {
  return make_problem({{15, 50}, {20, 45}}, {0.6, 0.4}, {"A", "B"}, {"growth", "salary"});
}

inline Problem job_pref() {
  return make_problem({{0, 100}, {100, 0}}, {0.6, 0.4}, {"A", "B"}, {"growth", "salary"});
}

inline Problem design_example(int n) {
  switch (n) {
    case 1: return make_problem({{0.90, 0.35}, {0.60, 0.60}}, {0.6, 0.4});
    case 2: return make_problem({{0.90, 0.35}, {0.60, 0.60}}, {0.54, 0.46});
    case 3: return make_problem({{0.90, 0.35}, {0.60, 0.60}}, {0.48, 0.52});
    case 4: return make_problem({{0.90, 0.20}, {0.50, 0.55}}, {0.5, 0.5});
    default:
      return make_problem(
          {{0.87, 0.62, 0.53}, {0.80, 0.72, 0.72}, {0.77, 0.70, 0.54}, {0.79, 0.93, 0.56}},
          {0.50, 0.25, 0.25});
  }
}

inline Problem scale_dataset(int n) {
  switch (n) {
    case 0: return make_problem({{100, 40}, {0, 60}, {20, 45}, {85, 50}, {60, 55}}, {0.5, 0.5});
    case 1: return make_problem({{100, 0}, {0, 100}, {20, 25}, {85, 50}, {60, 75}}, {0.5, 0.5});
    case 2: return make_problem({{0, 100}, {100, 0}, {50, 50}, {80, 30}, {20, 70}}, {0.5, 0.5});
    case 10: return make_problem({{0, 0}, {0, 100}, {100, 60}}, {0.3, 0.7});
    case 15: return make_problem({{-50, -50}, {-50, 50}, {50, 10}}, {0.3, 0.7});
    case 20: return make_problem({{90, 20}, {50, 55}, {10, 100}}, {0.5, 0.5});
    default: return make_problem({{95, 10}, {60, 55}, {10, 100}}, {0.51, 0.49});
  }
}

inline Problem distance_dataset(int n) {
  const std::vector<std::string> abc{"A", "B", "C"};
  switch (n) {
    case 0: return make_problem({{90, 10}, {50, 50}, {10, 90}}, {0.5, 0.5}, abc);
    case 1: return make_problem({{60, 0}, {0, 100}, {100, 20}}, {0.3, 0.7}, abc);
    case 2: return make_problem({{90, 20}, {50, 55}, {10, 100}}, {0.5, 0.5}, abc);
    default: return make_problem({{0, 0}, {0, 100}, {100, 60}}, {0.3, 0.7}, abc);
  }
}

/// Seeded random problems: I in [2, 8], J in [1, 6], scores uniform on
/// [-100, 100], weights from normalized uniform draws.
class ProblemGenerator {
 public:
  explicit ProblemGenerator(unsigned seed) : rng_(seed) {}

  Problem next() {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(2, 8)(rng_);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 6)(rng_);
    return next(rows, cols);
  }

  Problem next(std::size_t rows, std::size_t cols) {
    std::uniform_real_distribution<double> score(-100.0, 100.0);
    std::vector<std::vector<double>> grid(rows, std::vector<double>(cols));
    for (auto& r : grid) {
      for (auto& v : r) v = score(rng_);
    }
    return make_problem(std::move(grid), weights(cols));
  }

  std::vector<double> weights(std::size_t n) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) sum += (x = u(rng_));
    for (auto& x : w) x /= sum;
    return w;
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pfm::testing
