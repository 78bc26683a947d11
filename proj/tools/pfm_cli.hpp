#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pfm/aggregation.hpp"
#include "pfm/io.hpp"

namespace pfm::cli {

/// Exit codes of the `pfm` tool.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kNotComparable = 3,
};

struct CliConfig {
  std::string subcommand;
  std::string input = "-";
  std::optional<InputFormat> input_format;  ///< inferred when empty
  std::vector<Method> methods;
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;  ///< falls back to PFM_RANK_SEED, then 0
  double tie_tolerance = kScoreTolerance;
  DegeneratePolicy policy = DegeneratePolicy::kReject;
  bool normalize_weights = false;
  OutputFormat output_format = OutputFormat::kText;
  std::string output_path;  ///< empty = stdout
};

/// Runs the tool on `args` (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pfm::cli
