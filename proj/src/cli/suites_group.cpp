// Group-level suites on grid-sampled SU(2) paths.

#include "lie2/su2_sampled.hpp"
#include "suite_kit.hpp"

namespace lie2::cli {

namespace {

// amplitudes used for every sampled family; see the convergence tests
constexpr double kLoopAmplitude = 0.5;
constexpr double kPathAmplitude = 0.5;

Su2Embedding embedding(const Ctx& c) {
  if (matrix_substitution_note(c.cfg, c.g)) return Su2Embedding::for_algebra(make_su2(c.cfg.form_scale));
  return Su2Embedding::for_algebra(c.g);
}

template <std::size_t N>
Json family_json(const std::array<double, N>& coeffs, double amplitude) {
  Json j;
  j["amplitude"] = amplitude;
  j["c"] = coeffs;
  return j;
}

Json to_json(const LoopFamily& f) { return family_json(f.c, f.amplitude); }
Json to_json(const PathFamily& p) { return family_json(p.c, p.amplitude); }

template <class Body>
void group_check(Ctx& c, SuiteResult& out, std::string name, Body body) {
  const std::size_t n = static_cast<std::size_t>(c.cfg.group_trials);
  CheckResult chk = make_check(std::move(name), c.cfg.tol_quad, n);
  chk.details["nt"] = c.cfg.nt;
  chk.details["ntheta"] = c.cfg.ntheta;
  const SampleBatch b = c.batch(0, n);
  for (std::size_t t = b.first; t < b.end(); ++t) {
    Rng rng = trial_rng(b.seed, t);
    auto [r, inputs] = body(rng);
    offer(chk, r, t, [&] { return inputs; });
  }
  finish(chk);
  out.checks.push_back(std::move(chk));
  if (auto note = matrix_substitution_note(c.cfg, c.g)) out.details["note"] = *note;
}

}  // namespace

void kappa_cocycle(Ctx& c, SuiteResult& out) {
  const Su2Embedding emb = embedding(c);
  group_check(c, out, "cocycle", [&](Rng& rng) {
    const LoopFamily f = LoopFamily::sample(rng, kLoopAmplitude);
    const LoopFamily g = LoopFamily::sample(rng, kLoopAmplitude);
    const LoopFamily h = LoopFamily::sample(rng, kLoopAmplitude);
    const double r = kappa_cocycle_residual(emb, f.grid(c.cfg.nt, c.cfg.ntheta), g.grid(c.cfg.nt, c.cfg.ntheta),
                                            h.grid(c.cfg.nt, c.cfg.ntheta), c.cfg.k);
    Json in;
    in["f"] = to_json(f);
    in["g"] = to_json(g);
    in["h"] = to_json(h);
    return std::pair{r, in};
  });
}

void ad_omega(Ctx& c, SuiteResult& out) {
  const Su2Embedding emb = embedding(c);
  const AlgebraPtr& alg = emb.algebra();
  group_check(c, out, "coboundary", [&](Rng& rng) {
    const PathFamily p = PathFamily::sample(rng, kPathAmplitude);
    const PolyPath xi = PolyPath::sample(alg, PathKind::Loop, 4, rng);
    const PolyPath eta = PolyPath::sample(alg, PathKind::Loop, 4, rng);
    const double r = ad_omega_identity_residual(emb, p.grid(c.cfg.ntheta), xi, eta, c.cfg.k);
    Json in;
    in["p"] = to_json(p);
    in["xi"] = lie2::to_json(xi);
    in["eta"] = lie2::to_json(eta);
    return std::pair{r, in};
  });
}

void kappa_conjugation(Ctx& c, SuiteResult& out) {
  const Su2Embedding emb = embedding(c);
  group_check(c, out, "conjugation", [&](Rng& rng) {
    const PathFamily p = PathFamily::sample(rng, kPathAmplitude);
    const LoopFamily f1 = LoopFamily::sample(rng, kLoopAmplitude);
    const LoopFamily f2 = LoopFamily::sample(rng, kLoopAmplitude);
    const double r = kappa_conjugation_identity_residual(emb, p.grid(c.cfg.ntheta), f1.grid(c.cfg.nt, c.cfg.ntheta),
                                                         f2.grid(c.cfg.nt, c.cfg.ntheta), c.cfg.k);
    Json in;
    in["p"] = to_json(p);
    in["f1"] = to_json(f1);
    in["f2"] = to_json(f2);
    return std::pair{r, in};
  });
}

}  // namespace lie2::cli
