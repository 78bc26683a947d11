#include "pfm_cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "pfm/diagnostics.hpp"
#include "pfm/errors.hpp"

namespace pfm::cli {

namespace {

struct Outcome {
  int code = kOk;
  std::string body;
  std::string message;  ///< printed to stderr after the body
};

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> methods;
  for (const auto& raw : names) {
    std::stringstream ss(raw);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      auto m = parse_method(name);
      if (!m) {
        throw ValidationError("unknown method '" + name +
                              "' (expected pstar, wam, wgm, kcentroid, euclid, manhattan)");
      }
      methods.push_back(*m);
    }
  }
  return methods;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("PFM_RANK_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t seed = 0;
  std::istringstream ss(env);
  if (!(ss >> seed) || !ss.eof()) {
    throw ValidationError(std::string("PFM_RANK_SEED is not an unsigned integer: ") + env);
  }
  return seed;
}

InputFormat infer_format(const CliConfig& config, const std::string& bytes) {
  if (config.input_format) return *config.input_format;
  const auto& path = config.input;
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return InputFormat::kJson;
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return InputFormat::kCsv;
  const auto first = bytes.find_first_not_of(" \t\r\n");
  return first != std::string::npos && bytes[first] == '{' ? InputFormat::kJson : InputFormat::kCsv;
}

ProblemDocument load(const CliConfig& config, std::istream& in) {
  std::string bytes;
  if (config.input == "-") {
    bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(config.input, std::ios::binary);
    if (!file) throw ValidationError("cannot read input file '" + config.input + "'");
    bytes.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_problem(bytes, infer_format(config, bytes), ParseOptions{config.normalize_weights});
}

Outcome cmd_rank(const CliConfig& config, std::istream& in) {
  const auto doc = load(config, in);
  const auto result = rank_pstar(doc.matrix, doc.weights, {config.tie_tolerance, config.policy});
  return {kOk, write_result(result, config.output_format), {}};
}

Outcome cmd_compare(const CliConfig& config, std::istream& in) {
  const auto doc = load(config, in);
  std::vector<Method> methods = config.methods;
  if (methods.empty()) methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
  const auto report =
      compare_methods(doc.matrix, doc.weights, methods, {config.tie_tolerance, config.policy});
  return {kOk, write_result(report, config.output_format), {}};
}

Outcome cmd_check(const CliConfig& config, std::istream& in) {
  const auto doc = load(config, in);
  const auto report = check_problem(doc.matrix, doc.weights, config.policy);
  Outcome outcome{kOk, write_result(report, config.output_format), {}};
  if (report.equilibrium.max_horizontal > kScoreTolerance ||
      report.equilibrium.max_vertical > kScoreTolerance) {
    outcome.code = kInternal;
    outcome.message = "equilibrium residuals exceed tolerance";
  } else if (!report.comparability.comparable) {
    outcome.code = kNotComparable;
    outcome.message = "criteria scales are not comparable:";
    const auto& names = report.comparability.criteria;
    for (const auto& [j, k] : report.comparability.violating_pairs) {
      outcome.message += " (" + names[j] + ", " + names[k] + ")";
    }
  }
  return outcome;
}

Outcome cmd_fuzz(const CliConfig& config, std::istream& in) {
  if (config.trials < 1) throw ValidationError("--trials must be at least 1");
  const auto doc = load(config, in);
  const std::uint64_t seed = resolve_seed(config.seed);
  std::vector<Method> methods = config.methods;
  if (methods.empty()) methods.push_back(Method::kPStar);
  TrialOptions options;
  options.tie_tolerance = config.tie_tolerance;
  options.policy = config.policy;
  std::vector<InvarianceReport> reports;
  for (Method m : methods) {
    reports.push_back(invariance_trial(doc.matrix, doc.weights, m, config.trials, seed, options));
  }
  return {kOk, write_result(reports, config.output_format), {}};
}

Outcome cmd_plot_data(const CliConfig& config, std::istream& in) {
  const auto doc = load(config, in);
  return {kOk, write_plot_data(emit_plot_data(doc.matrix, doc.weights, config.policy)), {}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CliConfig config;
  std::vector<std::string> method_names;
  std::string input_format;
  std::string output_format = "text";
  std::string degenerate = "reject";
  std::uint64_t seed = 0;

  CLI::App app{"Preference aggregation in a z-normalized linear preference space", "pfm"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Problem file (CSV or JSON); '-' reads stdin");
    sub->add_option("--format", input_format, "Input format override")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", output_format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", config.output_path, "Write output to this file");
    sub->add_option("--tie-tol", config.tie_tolerance, "Absolute tie tolerance on scores")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--degenerate", degenerate, "Policy for zero-spread criteria")
        ->check(CLI::IsMember({"reject", "zero"}));
    sub->add_flag("--normalize-weights", config.normalize_weights,
                  "Rescale weights to sum to 1 instead of rejecting them");
  };

  auto* rank_cmd = app.add_subcommand("rank", "Rank alternatives by the weighted centroid P*");
  add_common(rank_cmd);
  auto* compare_cmd = app.add_subcommand("compare", "Rank with several aggregators side by side");
  add_common(compare_cmd);
  compare_cmd->add_option("--methods", method_names,
                          "Comma-separated: pstar,wam,wgm,kcentroid,euclid,manhattan");
  auto* check_cmd =
      app.add_subcommand("check", "Scale comparability and barycentre equilibrium residuals");
  add_common(check_cmd);
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded affine-invariance trials per method");
  add_common(fuzz_cmd);
  fuzz_cmd->add_option("--methods", method_names, "Comma-separated methods (default pstar)");
  fuzz_cmd->add_option("--trials", config.trials, "Number of random trials");
  auto* seed_opt = fuzz_cmd->add_option("--seed", seed, "Seed (default: $PFM_RANK_SEED or 0)");
  auto* plot_cmd = app.add_subcommand("plot-data", "Emit z-points and barycentres as JSON");
  add_common(plot_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    config.subcommand = app.get_subcommands().front()->get_name();
    if (!input_format.empty()) config.input_format = parse_input_format(input_format);
    config.output_format = *parse_output_format(output_format);
    config.policy = degenerate == "zero" ? DegeneratePolicy::kZero : DegeneratePolicy::kReject;
    if (*seed_opt) config.seed = seed;
    config.methods = parse_methods(method_names);
    if (config.subcommand == "compare" && !method_names.empty() && config.methods.empty()) {
      throw ValidationError("--methods must name at least one method");
    }

    Outcome outcome;
    if (config.subcommand == "rank") {
      outcome = cmd_rank(config, in);
    } else if (config.subcommand == "compare") {
      outcome = cmd_compare(config, in);
    } else if (config.subcommand == "check") {
      outcome = cmd_check(config, in);
    } else if (config.subcommand == "fuzz") {
      outcome = cmd_fuzz(config, in);
    } else {
      outcome = cmd_plot_data(config, in);
    }

    if (config.output_path.empty()) {
      out << outcome.body;
    } else {
      std::ofstream file(config.output_path, std::ios::binary);
      file << outcome.body;
      if (!file) {
        err << "pfm: cannot write '" << config.output_path << "'\n";
        return kInternal;
      }
    }
    if (!outcome.message.empty()) err << "pfm: " << outcome.message << "\n";
    return outcome.code;
  } catch (const InputError& e) {
    err << "pfm: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "pfm: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace pfm::cli
