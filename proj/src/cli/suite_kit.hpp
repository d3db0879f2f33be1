#pragma once

// Shared plumbing for the suite implementations: per-suite seeding, trial ranges and
// worst-case bookkeeping.

#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <span>

#include "lie2/algebra.hpp"
#include "lie2/cli.hpp"
#include "lie2/linfty.hpp"
#include "lie2/poly_path.hpp"
#include "lie2/rng.hpp"

namespace lie2::cli {

struct Ctx {
  const RunConfig& cfg;
  std::string suite;
  std::uint64_t seed = 0;
  std::optional<std::size_t> only;
  AlgebraPtr g;
  ScalarPoly f;

  /// Batch of n trials for sub-check `sub`. Trials of the batch carry the global indices
  /// offset .. offset+n-1 within their check; when replaying, only the requested one runs.
  SampleBatch batch(std::uint64_t sub, std::size_t n, std::size_t offset = 0) const {
    SampleBatch b{split_seed(seed, sub), n, 0};
    if (only) {
      const bool mine = *only >= offset && *only < offset + n;
      b.first = mine ? *only - offset : 0;
      b.trials = mine ? 1 : 0;
    }
    return b;
  }
  /// Whether deterministic item `index` of a check runs.
  bool runs(std::size_t index) const { return !only || *only == index; }
  std::filesystem::path data_dir() const;
};

ScalarPoly parse_splitting(const std::string& text);
AlgebraPtr load_configured_algebra(const RunConfig& cfg);

inline CheckResult make_check(std::string name, double tolerance, std::size_t trials) {
  CheckResult c;
  c.name = std::move(name);
  c.tolerance = tolerance;
  c.trials = trials;
  c.details = Json::object();
  return c;
}

/// Records a trial; the first trial and every strictly worse one become the witness.
inline void offer(CheckResult& c, double residual, std::size_t trial, const std::function<Json()>& inputs) {
  // a NaN must not hide behind the comparison below
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  if (c.witness.is_null() || residual > c.max_residual) {
    c.max_residual = residual;
    c.witness = Json::object();
    c.witness["trial"] = trial;
    c.witness["inputs"] = inputs();
  }
}

inline void finish(CheckResult& c) {
  c.pass = c.witness.is_null() || c.max_residual <= c.tolerance;
  if (c.witness.is_null()) c.trials = 0;
}

/// Takes over a Worst<> record from the templated checkers.
template <class Inputs, class Ser>
void absorb(CheckResult& c, const Worst<Inputs>& w, std::size_t offset, Ser ser) {
  if (w.inputs) offer(c, w.residual, offset + w.trial, [&] { return ser(*w.inputs); });
}

template <class V0, class V1>
Json graded_to_json(const std::vector<Graded<V0, V1>>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) {
    Json e;
    e["degree"] = x.degree();
    e["value"] = x.degree() == 0 ? to_json(x.x0()) : to_json(x.x1());
    arr.push_back(std::move(e));
  }
  return arr;
}

template <class S0, class S1>
Json hom_sample_to_json(const HomSample<S0, S1>& s) {
  Json j;
  j["x"] = to_json(s.x);
  j["y"] = to_json(s.y);
  j["z"] = to_json(s.z);
  j["h"] = to_json(s.h);
  return j;
}

template <class S0, class S1>
Json two_hom_sample_to_json(const TwoHomSample<S0, S1>& s) {
  Json j;
  j["x"] = to_json(s.x);
  j["y"] = to_json(s.y);
  j["h"] = to_json(s.h);
  return j;
}

inline double exact_residual(bool ok) { return ok ? 0.0 : 1.0; }

// suite bodies, grouped by layer
using SuiteBody = std::function<void(Ctx&, SuiteResult&)>;

void gk_jacobi(Ctx&, SuiteResult&);
void pkg_jacobi(Ctx&, SuiteResult&);
void phi_hom(Ctx&, SuiteResult&);
void psi_hom(Ctx&, SuiteResult&);
void lambda_hom(Ctx&, SuiteResult&);
void tau_2hom(Ctx&, SuiteResult&);
void exactness(Ctx&, SuiteResult&);
void equivalence(Ctx&, SuiteResult&);
void omega_cocycle(Ctx&, SuiteResult&);
void extended_jacobi(Ctx&, SuiteResult&);
void dalpha_action(Ctx&, SuiteResult&);
void extras(Ctx&, SuiteResult&);

void kappa_cocycle(Ctx&, SuiteResult&);
void ad_omega(Ctx&, SuiteResult&);
void kappa_conjugation(Ctx&, SuiteResult&);

void crossed_axioms(Ctx&, SuiteResult&);
void two_group_axioms(Ctx&, SuiteResult&);
void strict_exactness(Ctx&, SuiteResult&);

/// Non-empty when the configured algebra cannot be realized by su(2) matrices.
std::optional<std::string> matrix_substitution_note(const RunConfig& cfg, const AlgebraPtr& g);

}  // namespace lie2::cli
