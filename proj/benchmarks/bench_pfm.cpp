#include <benchmark/benchmark.h>

#include <random>

#include "pfm/aggregation.hpp"
#include "pfm/diagnostics.hpp"

namespace {

struct Problem {
  pfm::PreferenceMatrix matrix;
  pfm::WeightVector weights;
};

Problem random_problem(std::size_t rows, std::size_t cols, unsigned seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> score(0.0, 100.0);
  pfm::Grid grid(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) grid(i, j) = score(rng);
  }
  std::vector<std::string> alts, crits;
  for (std::size_t i = 0; i < rows; ++i) alts.push_back("A" + std::to_string(i + 1));
  for (std::size_t j = 0; j < cols; ++j) crits.push_back("C" + std::to_string(j + 1));
  std::vector<double> w(cols, 1.0);
  return {pfm::PreferenceMatrix(std::move(alts), std::move(crits), std::move(grid)),
          pfm::WeightVector::normalized(w)};
}

void BM_RankPstar(benchmark::State& state) {
  const auto p = random_problem(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pfm::rank_pstar(p.matrix, p.weights));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK(BM_RankPstar)->Args({10, 5})->Args({1000, 20})->Args({100000, 10});

void BM_InvarianceTrial(benchmark::State& state) {
  const auto p = random_problem(8, 6);
  const auto method = static_cast<pfm::Method>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pfm::invariance_trial(p.matrix, p.weights, method, 1000, 7));
}
BENCHMARK(BM_InvarianceTrial)
    ->Arg(static_cast<int>(pfm::Method::kPStar))
    ->Arg(static_cast<int>(pfm::Method::kWam))
    ->Arg(static_cast<int>(pfm::Method::kKCentroid));

void BM_CompareMethods(benchmark::State& state) {
  const auto p = random_problem(state.range(0), 8);
  for (auto _ : state) benchmark::DoNotOptimize(pfm::compare_methods(p.matrix, p.weights, pfm::kAllMethods));
}
BENCHMARK(BM_CompareMethods)->Arg(10)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
