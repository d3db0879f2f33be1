// lie2verify: run, describe and replay the verification suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lie2/cli.hpp"

namespace {

using lie2::cli::Json;

void write_report(const Json& j, const std::string& path) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw lie2::cli::ConfigError("cannot write report to " + path);
  out << j.dump(2) << "\n";
}

Json read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lie2::cli::ConfigError("cannot read report " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw lie2::cli::ConfigError("report " + path + " is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks the string Lie 2-algebra identities numerically and exactly."};
  app.require_subcommand(1);

  lie2::cli::RunConfig cfg;
  std::string report_path;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--algebra", cfg.algebra, "su2, so3, so<n>, or a JSON algebra file")->capture_default_str();
  verify->add_option("--form-scale", cfg.form_scale, "multiplier on the invariant form")->capture_default_str();
  verify->add_option("--k", cfg.k, "level")->capture_default_str();
  verify->add_option("--degree", cfg.degree, "polynomial degree of sampled paths, at least 2")->capture_default_str();
  verify->add_option("--splitting", cfg.splitting, "linear, smoothstep, or coefficients c0,c1,... in u = theta/2pi")
      ->capture_default_str();
  verify->add_option("--nt", cfg.nt, "grid intervals in t")->capture_default_str();
  verify->add_option("--ntheta", cfg.ntheta, "grid intervals in theta")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "root seed")->capture_default_str();
  verify->add_option("--trials", cfg.trials, "random trials per algebraic check")->capture_default_str();
  verify->add_option("--group-trials", cfg.group_trials, "random grids per group-level check")->capture_default_str();
  verify->add_option("--tol-exact", cfg.tol_exact, "tolerance for algebraic identities")->capture_default_str();
  verify->add_option("--tol-quad", cfg.tol_quad, "tolerance for quadrature-based identities")->capture_default_str();
  std::vector<std::string> suites;
  verify->add_option("--suite", suites, "suite name or 'all' (repeatable)");
  verify->add_option("--jobs", cfg.jobs, "suites run in parallel")->capture_default_str();
  verify->add_option("--data-dir", cfg.data_dir, "directory holding groups/ and crossed_modules/");
  verify->add_option("--report", report_path, "write the JSON report here ('-' for stdout)");
  verify->add_flag("--quiet", quiet, "no table on stdout");

  std::string describe_name;
  bool list = false;
  auto* describe = app.add_subcommand("describe", "explain what a suite checks");
  describe->add_option("suite", describe_name, "suite name");
  describe->add_flag("--list", list, "list all suites");

  std::string replay_path;
  std::vector<std::string> replay_suites;
  auto* replay = app.add_subcommand("replay", "re-evaluate the witnesses recorded in a report");
  replay->add_option("report", replay_path, "report JSON")->required();
  replay->add_option("--suite", replay_suites, "restrict to these suites (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lie2::cli::kConfigError;
  }

  try {
    if (*verify) {
      if (!suites.empty()) cfg.suites = suites;
      const auto rep = lie2::cli::run(cfg);
      const Json j = rep.to_json();
      if (!report_path.empty()) write_report(j, report_path);
      if (!quiet && report_path != "-") std::cout << rep.table();
      return rep.exit_code();
    }
    if (*describe) {
      if (list || describe_name.empty()) {
        for (const auto& n : lie2::cli::suite_names()) std::cout << n << "\n";
        return 0;
      }
      std::cout << lie2::cli::describe(describe_name);
      return 0;
    }
    if (*replay) {
      const auto outcomes = lie2::cli::replay(read_report(replay_path), replay_suites);
      bool ok = true;
      for (const auto& o : outcomes) {
        ok = ok && o.reproduced();
        std::cout << (o.reproduced() ? "reproduced " : "MISMATCH   ") << o.suite << " / " << o.check << " trial "
                  << o.trial << ": recorded " << Json(o.recorded).dump() << ", replayed "
                  << Json(o.replayed).dump() << (o.inputs_match ? "" : " (inputs differ)") << "\n";
      }
      return ok ? 0 : lie2::cli::kResidualFailure;
    }
  } catch (const lie2::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lie2::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lie2::cli::kConfigError;
  }
  return 0;
}
