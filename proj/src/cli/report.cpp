#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "suite_kit.hpp"

namespace lie2::cli {

namespace {

const std::map<std::string, SuiteBody>& bodies() {
  static const std::map<std::string, SuiteBody> m = {
      {"gk-jacobi", gk_jacobi},
      {"pkg-jacobi", pkg_jacobi},
      {"phi-hom", phi_hom},
      {"psi-hom", psi_hom},
      {"lambda-hom", lambda_hom},
      {"tau-2hom", tau_2hom},
      {"exactness", exactness},
      {"equivalence", equivalence},
      {"omega-cocycle", omega_cocycle},
      {"extended-jacobi", extended_jacobi},
      {"dalpha-action", dalpha_action},
      {"extras", extras},
      {"kappa-cocycle", kappa_cocycle},
      {"ad-omega", ad_omega},
      {"kappa-conjugation", kappa_conjugation},
      {"crossed-axioms", crossed_axioms},
      {"two-group-axioms", two_group_axioms},
      {"strict-exactness", strict_exactness},
  };
  return m;
}

/// residual / tolerance, with a zero tolerance making any nonzero residual infinitely bad.
double badness(const CheckResult& c) {
  if (c.tolerance > 0) return c.max_residual / c.tolerance;
  return c.max_residual > 0 ? std::numeric_limits<double>::infinity() : 0.0;
}

Json check_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["trials"] = c.trials;
  j["max_residual"] = c.max_residual;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  j["witness"] = c.witness;
  j["details"] = c.details;
  return j;
}

double residual_from_json(const Json& j) {
  // JSON has no infinity; an infinite residual is written as null
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

Json SuiteResult::to_json() const {
  Json j;
  j["name"] = name;
  j["trials"] = trials;
  j["max_residual"] = max_residual;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j["witness"] = witness;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back(check_json(c));
  j["checks"] = cs;
  j["details"] = details;
  return j;
}

SuiteResult run_suite(const RunConfig& cfg, const std::string& name, std::optional<std::size_t> only_trial) {
  const auto it = bodies().find(name);
  if (it == bodies().end()) throw ConfigError("unknown suite '" + name + "'");
  Ctx ctx{cfg, name, split_seed(cfg.seed, stream_id(name)), only_trial, load_configured_algebra(cfg),
          parse_splitting(cfg.splitting)};
  SuiteResult out;
  out.name = name;
  out.details = Json::object();
  it->second(ctx, out);

  const CheckResult* worst = nullptr;
  for (const auto& c : out.checks) {
    out.trials += c.trials;
    out.pass = out.pass && c.pass;
    if (c.witness.is_null()) continue;
    if (!worst || badness(c) > badness(*worst)) worst = &c;
  }
  if (worst) {
    out.max_residual = worst->max_residual;
    out.tolerance = worst->tolerance;
    out.witness = Json::object();
    out.witness["check"] = worst->name;
    out.witness["trial"] = worst->witness["trial"];
    out.witness["residual"] = worst->max_residual;
    out.witness["inputs"] = worst->witness["inputs"];
  } else if (!out.checks.empty()) {
    out.tolerance = out.checks.front().tolerance;
  }
  return out;
}

bool Report::all_pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

Json Report::to_json() const {
  Json j;
  j["tool"] = "lie2verify";
  j["format"] = 1;
  j["config"] = config.to_json();
  j["warnings"] = warnings;
  Json ss = Json::array();
  for (const auto& s : suites) ss.push_back(s.to_json());
  j["suites"] = ss;
  const auto passed = static_cast<std::size_t>(std::count_if(suites.begin(), suites.end(), [](const auto& s) { return s.pass; }));
  Json sum;
  sum["suites"] = suites.size();
  sum["passed"] = passed;
  sum["failed"] = suites.size() - passed;
  sum["all_pass"] = all_pass();
  sum["wall_time_s"] = wall_time_s;
  j["summary"] = sum;
  return j;
}

std::string Report::table() const {
  std::ostringstream os;
  os << std::left << std::setw(20) << "suite" << std::right << std::setw(8) << "trials" << std::setw(14)
     << "max residual" << std::setw(12) << "tolerance" << "  status\n";
  for (const auto& s : suites) {
    os << std::left << std::setw(20) << s.name << std::right << std::setw(8) << s.trials << std::setw(14)
       << std::setprecision(3) << std::scientific << s.max_residual << std::setw(12) << s.tolerance
       << (s.pass ? "  PASS" : "  FAIL");
    if (!s.pass && !s.witness.is_null())
      os << "  (" << s.witness["check"].get<std::string>() << ", trial " << s.witness["trial"] << ")";
    os << "\n";
  }
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  os << std::defaultfloat;
  os << (all_pass() ? "all suites passed" : "some suites FAILED") << " in " << std::fixed << std::setprecision(2)
     << wall_time_s << " s\n";
  return os.str();
}

Report run(const RunConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.config = cfg;
  rep.warnings = config_warnings(cfg);
  const auto names = expand_suites(cfg.suites);
  rep.suites.resize(names.size());

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), names.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) rep.suites[i] = run_suite(cfg, names[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < names.size(); i = next++) {
          try {
            rep.suites[i] = run_suite(cfg, names[i]);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Json deterministic_part(const Json& report) {
  Json j = report;
  if (j.contains("summary") && j["summary"].is_object()) j["summary"].erase("wall_time_s");
  return j;
}

std::vector<ReplayOutcome> replay(const Json& report, const std::vector<std::string>& suites) {
  if (!report.is_object() || !report.contains("config") || !report.contains("suites"))
    throw ConfigError("not a lie2verify report");
  const RunConfig cfg = RunConfig::from_json(report["config"]);
  validate(cfg);
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw ConfigError("unknown suite '" + s + "'");

  std::vector<ReplayOutcome> out;
  for (const auto& s : report["suites"]) {
    const std::string name = s.at("name").get<std::string>();
    if (!suites.empty() && std::find(suites.begin(), suites.end(), name) == suites.end()) continue;
    const Json& w = s.at("witness");
    if (w.is_null()) continue;
    ReplayOutcome o;
    o.suite = name;
    o.check = w.at("check").get<std::string>();
    o.trial = w.at("trial").get<std::size_t>();
    o.recorded = residual_from_json(w.at("residual"));
    const SuiteResult again = run_suite(cfg, name, o.trial);
    for (const auto& c : again.checks) {
      if (c.name != o.check || c.witness.is_null()) continue;
      o.replayed = c.max_residual;
      // compare through the same serialization the report went through
      o.inputs_match = Json::parse(c.witness["inputs"].dump()) == w.at("inputs") &&
                       c.witness["trial"].get<std::size_t>() == o.trial;
      if (std::isinf(o.recorded) && std::isinf(o.replayed)) o.replayed = o.recorded;
      else o.replayed = residual_from_json(Json::parse(Json(o.replayed).dump()));
    }
    out.push_back(o);
  }
  return out;
}

}  // namespace lie2::cli
