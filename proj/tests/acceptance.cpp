// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pfm/aggregation.hpp"
#include "pfm/baselines.hpp"
#include "pfm/diagnostics.hpp"
#include "pfm/io.hpp"
#include "pfm_cli.hpp"
#include "support.hpp"

namespace {

using namespace pfm;
namespace fs = std::filesystem;

// Tolerances are fixed here and nowhere else.
constexpr double kZTableTol = 5e-5;
constexpr double kPstarTol = 5e-6;
constexpr double kWgmExampleTol = 2e-3;
constexpr double kDistanceTableTol = 2e-3;
constexpr double kStandardizedTol = 1e-9;
constexpr double kDerivativeTol = 1e-6;
constexpr double kWlsdStep = 0.1;
constexpr double kFiniteDiffStep = 1e-5;
constexpr double kEquilibriumTol = 1e-9;
constexpr double kBeamTol = 5e-5;

constexpr std::size_t kInvarianceMatrices = 50;
constexpr std::size_t kInvarianceTrials = 1000;
constexpr std::size_t kWlsdCases = 100;
constexpr std::size_t kEquilibriumRandom = 100;

/// Collects failed sub-checks of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    std::ostringstream msg;
    msg.precision(10);
    msg << what << " = " << actual << ", expected " << expected << " +- " << tol;
    expect(std::abs(actual - expected) <= tol, msg.str());
  }
  template <typename T>
  void equal(const std::vector<T>& actual, const std::vector<T>& expected, const std::string& what) {
    expect(actual == expected, what + " = " + show(actual) + ", expected " + show(expected));
  }
  bool ok() const { return failures_.empty(); }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  template <typename T>
  static std::string show(const std::vector<T>& v) {
    std::ostringstream s;
    s << "(";
    for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
    s << ")";
    return s.str();
  }
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

std::vector<int> ranks(Method m, const testing::Problem& p) {
  return rank_method(m, p.matrix, p.weights).dense_ranks;
}

std::string ordering(Method m, const testing::Problem& p) {
  return format_ordering(rank_method(m, p.matrix, p.weights), p.matrix.alternatives());
}

std::vector<double> scores(Method m, const testing::Problem& p) {
  return evaluate_method(m, p.matrix, p.weights).scores;
}

std::vector<testing::Problem> worked_problems() {
  return {testing::demo(),        testing::demo_fail(),       testing::job_eur(),
          testing::job_kusd(), testing::job_pref(), testing::design_example(1),
          testing::design_example(2), testing::design_example(3), testing::design_example(4),
          testing::design_example(5), testing::scale_dataset(0), testing::scale_dataset(1),
          testing::scale_dataset(2), testing::scale_dataset(10), testing::scale_dataset(15),
          testing::scale_dataset(20), testing::scale_dataset(30), testing::distance_dataset(0),
          testing::distance_dataset(1), testing::distance_dataset(2), testing::distance_dataset(3)};
}

void z_table(Check& c) {
  const double printed[4][3] = {{1.1556, -1.4327, 0.7351},
                                {-1.2148, 1.3628, 0.9908},
                                {-0.7408, -0.1747, -0.1598},
                                {0.8000, 0.2446, -1.5660}};
  const auto z = z_normalize(testing::demo().matrix);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      c.near(z(i, j), printed[i][j], kZTableTol, "z(A" + std::to_string(i + 1) + ",C" + std::to_string(j + 1) + ")");
    }
  }
}

void worked_example(Check& c) {
  const auto p = testing::demo();
  const auto r = rank_pstar(p.matrix, p.weights);
  const double printed[] = {0.68651, 0.14572, -0.39368, -0.43855};
  const double scaled[] = {100, 52, 4, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    c.near(r.score_vector.scores[i], printed[i], kPstarTol, "P*(A" + std::to_string(i + 1) + ")");
    c.near(std::round(r.scaled->values[i]), scaled[i], 0.0, "scaled(A" + std::to_string(i + 1) + ")");
  }
  c.expect(format_ordering(r.ranking, r.alternatives) == "A1 > A2 > A3 > A4", "ordering");
}

void second_example(Check& c) {
  const auto p = testing::demo_fail();
  const auto r = rank_pstar(p.matrix, p.weights);
  const double scaled[] = {32, 100, 79, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    c.near(std::round(r.scaled->values[i]), scaled[i], 0.0, "scaled(A" + std::to_string(i + 1) + ")");
  }
  c.expect(format_ordering(r.ranking, r.alternatives) == "A2 > A3 > A1 > A4", "P* ordering");
  c.expect(ordering(Method::kWam, p) == "A1 = A2 = A3 = A4", "WAM 4-way tie: " + ordering(Method::kWam, p));
  const auto g = scores(Method::kWgm, p);
  c.expect(g[2] > 0 && g[0] == 0 && g[1] == 0 && g[3] == 0, "WGM: A3 > 0, others exactly 0");
  c.expect(ordering(Method::kWgm, p) == "A3 > A1 = A2 = A4", "WGM ordering: " + ordering(Method::kWgm, p));
  c.expect(ordering(Method::kDEuclid, p) == "A3 > A1 > A2 > A4", "D^E ordering: " + ordering(Method::kDEuclid, p));
  c.expect(ordering(Method::kDManhattan, p) == "A3 > A2 > A1 > A4",
           "D^M ordering: " + ordering(Method::kDManhattan, p));
}

void job_offer(Check& c) {
  c.equal(ranks(Method::kWam, testing::job_eur()), {1, 2}, "WAM ranks, EUR salaries");
  c.equal(ranks(Method::kWam, testing::job_kusd()), {2, 1}, "WAM ranks, k$ salaries");
  for (const auto& [name, p] : {std::pair{"EUR", testing::job_eur()}, std::pair{"k$", testing::job_kusd()},
                                std::pair{"0/100", testing::job_pref()}}) {
    c.expect(ordering(Method::kPStar, p) == "B > A", std::string("P* ordering, ") + name);
    const auto s = scores(Method::kPStar, p);
    c.near(s[0], -0.2, kPstarTol, std::string("P*(A), ") + name);
    c.near(s[1], 0.2, kPstarTol, std::string("P*(B), ") + name);
  }
}

void design_examples(Check& c) {
  const auto ex1 = testing::design_example(1);
  const auto wam1 = scores(Method::kWam, ex1), wgm1 = scores(Method::kWgm, ex1), p1 = scores(Method::kPStar, ex1);
  c.near(wam1[0], 0.68, 5e-3, "ex1 WAM(A1)");
  c.near(wam1[1], 0.60, 5e-3, "ex1 WAM(A2)");
  c.near(wgm1[0], 0.618, kWgmExampleTol, "ex1 WGM(A1)");
  c.near(wgm1[1], 0.600, kWgmExampleTol, "ex1 WGM(A2)");
  c.near(p1[0], 0.2, kPstarTol, "ex1 P*(A1)");
  c.near(p1[1], -0.2, kPstarTol, "ex1 P*(A2)");
  c.equal(ranks(Method::kPStar, ex1), {1, 2}, "ex1 ranks");

  const auto ex2 = testing::design_example(2);
  c.equal(ranks(Method::kWam, ex2), {1, 2}, "ex2 WAM ranks");
  c.equal(ranks(Method::kWgm, ex2), {2, 1}, "ex2 WGM ranks");
  c.equal(ranks(Method::kPStar, ex2), {1, 2}, "ex2 P* ranks");
  const auto ex3 = testing::design_example(3);
  c.equal(ranks(Method::kWam, ex3), {1, 2}, "ex3 WAM ranks");
  c.equal(ranks(Method::kWgm, ex3), {2, 1}, "ex3 WGM ranks");
  c.equal(ranks(Method::kPStar, ex3), {2, 1}, "ex3 P* ranks");

  const auto ex4 = testing::design_example(4);
  c.equal(ranks(Method::kWam, ex4), {1, 2}, "ex4 WAM ranks");
  c.equal(ranks(Method::kWgm, ex4), {2, 1}, "ex4 WGM ranks");
  c.equal(ranks(Method::kPStar, ex4), {1, 1}, "ex4 P* ranks");

  const auto ex5 = testing::design_example(5);
  c.equal(ranks(Method::kWam, ex5), {4, 2, 3, 1}, "ex5 WAM ranks");
  c.equal(ranks(Method::kWgm, ex5), {3, 1, 4, 2}, "ex5 WGM ranks");
  c.equal(ranks(Method::kPStar, ex5), {1, 2, 4, 3}, "ex5 P* ranks");
}

void k_vs_z(Check& c) {
  struct Row {
    int dataset;
    const char* k;
    const char* z;
  };
  const Row rows[] = {
      {1, "A4 = A5 > A1 = A2 > A3", "A5 > A4 > A2 > A1 > A3"},
      {2, "A4 > A1 = A2 = A3 > A5", "A4 > A1 > A3 > A2 > A5"},
      {10, "A3 > A2 > A1", "A2 > A3 > A1"},
      {15, "A3 > A2 > A1", "A2 > A3 > A1"},
      {20, "A1 = A3 > A2", "A1 > A3 > A2"},
      {30, "A1 > A2 > A3", "A2 > A1 > A3"},
  };
  for (const auto& row : rows) {
    const auto p = testing::scale_dataset(row.dataset);
    const auto d = "dataset " + std::to_string(row.dataset);
    const auto k = ordering(Method::kKCentroid, p), z = ordering(Method::kPStar, p);
    c.expect(k == row.k, d + " Pi*(k): " + k + ", expected " + row.k);
    c.expect(z == row.z, d + " P*(z): " + z + ", expected " + row.z);
  }
  const auto d10 = testing::scale_dataset(10), d15 = testing::scale_dataset(15);
  for (Method m : {Method::kKCentroid, Method::kPStar}) {
    c.expect(ranks(m, d10) == ranks(m, d15), std::string("shifted datasets agree under ") + std::string(method_symbol(m)));
    const auto a = scores(m, d10), b = scores(m, d15);
    for (std::size_t i = 0; i < a.size(); ++i) c.near(b[i], a[i], 1e-12, std::string("shifted score ") + std::string(method_symbol(m)));
  }
}

void distance_tables(Check& c) {
  const auto d1 = testing::distance_dataset(1);
  const double p1[] = {-0.599, 0.582, 0.017}, de1[] = {2.805, 1.690, 1.505};
  const auto ps = scores(Method::kPStar, d1), de = scores(Method::kDEuclid, d1);
  for (std::size_t i = 0; i < 3; ++i) {
    c.near(ps[i], p1[i], kDistanceTableTol, "dataset 1 P*[" + std::to_string(i) + "]");
    c.near(de[i], de1[i], kDistanceTableTol, "dataset 1 D^E[" + std::to_string(i) + "]");
  }
  const auto dm = scores(Method::kDManhattan, testing::distance_dataset(2));
  const double dm2[] = {1.197, 1.051, 1.248};
  for (std::size_t i = 0; i < 3; ++i) c.near(dm[i], dm2[i], kDistanceTableTol, "dataset 2 D^M[" + std::to_string(i) + "]");

  const auto d3 = testing::distance_dataset(3);
  c.expect(ordering(Method::kDEuclid, d3) == "C > B > A", "dataset 3 D^E: " + ordering(Method::kDEuclid, d3));
  c.expect(ordering(Method::kDManhattan, d3) == "B > C > A", "dataset 3 D^M: " + ordering(Method::kDManhattan, d3));

  // Symmetric case. P* comes from the full pipeline; D^E is evaluated on the
  // printed unit z-table (±1, 0), which is not population-standardized.
  const auto sym = testing::distance_dataset(0);
  const auto r = rank_pstar(sym.matrix, sym.weights);
  c.expect(r.ranking.tie_groups.size() == 1 && r.scaled->all_tied, "symmetric P* all tied");
  const auto printed_z = Grid::from_rows({{1, -1}, {0, 0}, {-1, 1}});
  c.equal(dist_euclid(printed_z, sym.weights).scores, {2.0, 1.0, 2.0}, "symmetric D^E on printed z");
  c.expect(format_ordering(rank(dist_euclid(printed_z, sym.weights)), sym.matrix.alternatives()) == "B > A = C",
           "symmetric D^E ordering");
}

void affine_invariance(Check& c) {
  testing::ProblemGenerator gen(20240101);
  std::size_t violations = 0, skipped = 0, z_checks = 0;
  for (std::size_t n = 0; n < kInvarianceMatrices; ++n) {
    const auto p = gen.next();
    const std::uint64_t seed = 1000 + n;
    for (Method m : {Method::kPStar, Method::kKCentroid}) {
      const auto report = invariance_trial(p.matrix, p.weights, m, kInvarianceTrials, seed);
      violations += report.violations;
      skipped += report.skipped;
      c.expect(report.violations == 0, std::string(method_name(m)) + " violations on matrix " + std::to_string(n) +
                                           ": " + std::to_string(report.violations));
    }
    // Replay the same maps and check the transformed z-columns directly.
    for (std::size_t t = 0; t < kInvarianceTrials; ++t) {
      TrialMapGenerator maps(seed, t);
      const auto z = z_normalize(apply_affine(p.matrix, maps.draw(p.matrix.num_criteria())));
      for (std::size_t j = 0; j < z.num_criteria(); ++j) {
        const auto col = z.values().column(j);
        double mean = 0.0, var = 0.0;
        for (double v : col) mean += v;
        mean /= static_cast<double>(col.size());
        for (double v : col) var += (v - mean) * (v - mean);
        const double sd = std::sqrt(var / static_cast<double>(col.size()));
        if (std::abs(mean) > kStandardizedTol || std::abs(sd - 1.0) > kStandardizedTol) {
          c.expect(false, "z column not standardized: matrix " + std::to_string(n) + " trial " + std::to_string(t));
        }
        ++z_checks;
      }
    }
  }
  c.expect(skipped == 0, "skipped trials: " + std::to_string(skipped));
  c.expect(z_checks > 0, "z checks ran");
}

void wlsd_argmin(Check& c) {
  testing::ProblemGenerator gen(777);
  for (std::size_t n = 0; n < kWlsdCases; ++n) {
    const std::size_t J = 1 + n % 6;
    std::vector<double> row(J);
    for (auto& v : row) v = gen.uniform(-3.0, 3.0);
    const WeightVector w(gen.weights(J));
    const double pstar = centroid(row, w);
    const double f = wlsd_objective(row, w, pstar);
    const double h = kFiniteDiffStep;
    const double deriv = (wlsd_objective(row, w, pstar + h) - wlsd_objective(row, w, pstar - h)) / (2.0 * h);
    c.expect(std::abs(deriv) <= kDerivativeTol, "derivative at case " + std::to_string(n));
    c.expect(wlsd_objective(row, w, pstar + kWlsdStep) > f && wlsd_objective(row, w, pstar - kWlsdStep) > f,
             "strict minimum at case " + std::to_string(n));
  }
}

void equilibrium(Check& c) {
  auto check = [&](const testing::Problem& p, const std::string& label) {
    const auto z = z_normalize(p.matrix);
    const auto report = equilibrium_check(z, p.weights, weighted_centroid(z, p.weights));
    c.expect(report.max_horizontal <= kEquilibriumTol, label + " horizontal residual");
    c.expect(report.max_vertical <= kEquilibriumTol, label + " vertical residual");
  };
  std::size_t k = 0;
  for (const auto& p : worked_problems()) check(p, "worked problem " + std::to_string(k++));
  testing::ProblemGenerator gen(4242);
  for (std::size_t n = 0; n < kEquilibriumRandom; ++n) check(gen.next(), "random problem " + std::to_string(n));

  const auto p = testing::demo();
  const auto z = z_normalize(p.matrix);
  const std::vector<double> masses(p.weights.values().begin(), p.weights.values().end());
  c.near(beam_equilibrium(z.values().row(0), masses), 0.6865, kBeamTol, "beam balance of A1");
}

void determinism(Check& c) {
  const fs::path dir = fs::path(PFM_SOURCE_DIR) / "problems";
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());

  auto run = [](std::vector<std::string> args) {
    args.insert(args.begin(), "pfm");
    std::istringstream in;
    std::ostringstream out, err;
    const int code = pfm::cli::run(args, in, out, err);
    return std::to_string(code) + "\n" + out.str() + "\x1f" + err.str();
  };

  const std::vector<std::vector<std::string>> commands{
      {"rank"},
      {"rank", "--out", "json"},
      {"rank", "--out", "csv"},
      {"compare"},
      {"compare", "--out", "json"},
      {"compare", "--out", "csv"},
      {"check"},
      {"check", "--out", "json"},
      {"fuzz", "--methods", "pstar,wam,wgm,kcentroid,euclid,manhattan", "--trials", "200", "--seed", "11"},
      {"fuzz", "--methods", "wam,kcentroid", "--trials", "200", "--seed", "11", "--out", "json"},
      {"plot-data"},
  };
  for (const auto& file : files) {
    for (auto args : commands) {
      args.insert(args.begin() + 1, file.string());
      const auto first = run(args);
      c.expect(first == run(args), "repeat differs: " + file.filename().string() + " " + args[0]);
    }
  }

  const auto p = testing::job_eur();
  const auto a = invariance_trial(p.matrix, p.weights, Method::kWam, kInvarianceTrials, 99);
  const auto b = invariance_trial(p.matrix, p.weights, Method::kWam, kInvarianceTrials, 99);
  c.expect(write_result(a, OutputFormat::kJson) == write_result(b, OutputFormat::kJson), "fuzz report for equal seeds");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "z-table of the 4x3 worked example", z_table},
      {2, "P*, scaled values and ranking of the 4x3 worked example", worked_example},
      {3, "second 4x3 example: P*, WAM tie, WGM, D^E and D^M rankings", second_example},
      {4, "job-offer counterexample under EUR, k$ and 0/100 scores", job_offer},
      {5, "two- and four-alternative design examples (values and rank tables)", design_examples},
      {6, "Pi*(k) vs P*(z) ranking tables and the shifted-dataset check", k_vs_z},
      {7, "distance-based tables and the symmetric case", distance_tables},
      {8, "affine invariance of P* and Pi*(k) over random matrices", affine_invariance},
      {9, "weighted centroid is the WLSD argmin", wlsd_argmin},
      {10, "barycentre equilibrium and beam balance", equilibrium},
      {11, "byte-identical CLI output and seeded fuzz reports", determinism},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    std::string error;
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && check.ok();
    std::cout << (ok ? "PASS" : "FAIL") << " [" << criterion.id << "] " << criterion.name << " (" << check.count()
              << " checks)";
    if (!error.empty()) std::cout << " : exception: " << error;
    for (const auto& f : check.failures()) std::cout << " : " << f;
    std::cout << "\n";
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << "\n";
  return failed == 0 ? 0 : 1;
}
