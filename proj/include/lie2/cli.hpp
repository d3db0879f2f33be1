#pragma once

// Named verification suites, run configuration and the JSON report behind lie2verify.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lie2/error.hpp"

namespace lie2::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kAllPass = 0,
  kResidualFailure = 1,
  kConfigError = 2,
  kAlgebraLoadError = 3,
  kInvalidSplitting = 4,
};

/// Bad flag values, unknown suite names, unreadable reports.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

/// Splitting function that is unparsable or violates f(0) = 0, f(2pi) = 1.
class SplittingError : public InputError {
 public:
  using InputError::InputError;
};

/// Maps the exceptions raised by validate/run/replay to the exit-code contract.
int exit_code_for(const std::exception& e);

struct RunConfig {
  std::string algebra = "su2";
  double form_scale = 1.0;
  double k = 1.0;
  int degree = 4;
  /// "linear" (f = u) or comma-separated coefficients of f in u, lowest first.
  std::string splitting = "linear";
  int nt = 256;
  int ntheta = 256;
  std::uint64_t seed = 42;
  int trials = 200;
  /// Random grids per group-level suite; each costs several full-grid evaluations.
  int group_trials = 3;
  double tol_exact = 1e-10;
  double tol_quad = 1e-3;
  std::vector<std::string> suites = {"all"};
  int jobs = 1;
  /// Holds groups/ and crossed_modules/; empty means the bundled data directory.
  std::string data_dir;

  Json to_json() const;
  static RunConfig from_json(const Json& j);
};

/// Throws ConfigError, AlgebraLoadError or SplittingError.
void validate(const RunConfig& cfg);

/// Every registered suite in report order.
const std::vector<std::string>& suite_names();
/// Expands "all" and rejects unknown names (ConfigError); keeps the first occurrence of repeats.
std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

/// What a suite checks, in a few lines. Throws ConfigError for unknown names.
std::string describe(const std::string& suite);

/// Non-fatal notes about the configuration (non-integer level, algebra substitutions).
std::vector<std::string> config_warnings(const RunConfig& cfg);

/// One named identity inside a suite.
struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  /// {"trial", "inputs"} of the worst trial, or null when no trial ran.
  Json witness;
  Json details;
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  /// Worst check relative to its tolerance: {"check", "trial", "residual", "inputs"}.
  Json witness;
  std::vector<CheckResult> checks;
  Json details;

  Json to_json() const;
};

/// Runs one suite. With only_trial set, every check evaluates just that trial index
/// (random checks redraw exactly the inputs the full run used there).
SuiteResult run_suite(const RunConfig& cfg, const std::string& name,
                      std::optional<std::size_t> only_trial = std::nullopt);

struct Report {
  RunConfig config;
  std::vector<std::string> warnings;
  std::vector<SuiteResult> suites;
  double wall_time_s = 0.0;

  bool all_pass() const;
  int exit_code() const { return all_pass() ? kAllPass : kResidualFailure; }
  Json to_json() const;
  /// Fixed-width table for terminals.
  std::string table() const;
};

/// Validates, then runs the configured suites (concurrently when jobs > 1).
Report run(const RunConfig& cfg);

/// The report without its wall-time field; equal for equal configurations.
Json deterministic_part(const Json& report);

struct ReplayOutcome {
  std::string suite;
  std::string check;
  std::size_t trial = 0;
  double recorded = 0.0;
  double replayed = 0.0;
  bool inputs_match = false;

  bool reproduced() const { return inputs_match && recorded == replayed; }
};

/// Re-evaluates each suite's recorded witness from the report's own configuration and
/// compares both the regenerated inputs and the residual with what was recorded.
std::vector<ReplayOutcome> replay(const Json& report, const std::vector<std::string>& suites = {});

}  // namespace lie2::cli
