#include <cmath>
#include <map>
#include <sstream>

#include "lie2/su2_sampled.hpp"
#include "suite_kit.hpp"

namespace lie2::cli {

namespace {

struct SuiteInfo {
  const char* name;
  const char* text;
};

// report order
const SuiteInfo kSuites[] = {
    {"gk-jacobi",
     "Generalized Jacobi identity of g_k (V0 = g, V1 = R, l2 = bracket, l3 = k <x, [y, z]>)\n"
     "for every degree signature with up to four inputs. Residual: |sum over unshuffles| divided\n"
     "by 1 + prod(1 + |x_i|). At k = 0 the structure is strict and every sum vanishes."},
    {"pkg-jacobi",
     "Generalized Jacobi identity of the path model P_k g: based paths in degree 0, loops plus R\n"
     "in degree 1, d(l, c) = l, l2(p, (l, c)) = ([p, l], 2k int <p, l'>), l3 = 0."},
    {"phi-hom",
     "phi : P_k g -> g_k with phi0 = endpoint, phi1(l, c) = c, phi2 = k int (<p1, p2'> - <p1', p2>).\n"
     "Chain-map condition, the three homomorphism coherence laws and linearity. The details carry a\n"
     "mutation control with phi2 = 0, which must fail whenever k != 0."},
    {"psi-hom",
     "psi : g_k -> P_k g from the splitting function f: psi0(x) = x f, psi1(c) = (0, c),\n"
     "psi2(x, y) = ([x, y](f - f^2), 0). The cubic coherence law reduces to\n"
     "int f (f - f^2)' dtheta = -1/6, which holds for every admissible f."},
    {"lambda-hom",
     "lambda : E(loops) -> P_k g: inclusion, lambda1(l) = (l, 0), lambda2(l1, l2) = (0, -2k int <l1, l2'>).\n"
     "Also solves for lambda2 on basis loops from the chain-map data alone and compares."},
    {"tau-2hom",
     "2-homomorphism tau : psi.phi => id on P_k g, tau(p) = (p - p(2pi) f, 0): both homotopy\n"
     "equations and the coherence law between the bracket components of psi.phi and id."},
    {"exactness",
     "Strict exactness of E(loops) -> P_k g -> g_k on paths of degree <= D, by exact integer\n"
     "ranks: im lambda = ker phi on objects and on morphisms, lambda injective, phi surjective.\n"
     "Runs every D from 2 to --degree."},
    {"equivalence",
     "phi.psi is the identity of g_k (its bracket component vanishes), the loop part of\n"
     "(psi.phi)_2(p1, p2) is [p1(2pi), p2(2pi)](f - f^2), tau : psi.phi => id is coherent, and the\n"
     "contraction of E(loops) onto 0 holds with zero residual."},
    {"omega-cocycle",
     "omega(f, g) = 2k int <f, g'> on loops satisfies the 2-cocycle condition\n"
     "omega([f, g], h) + omega([g, h], f) + omega([h, f], g) = 0. Also checks the worked value\n"
     "omega(u - u^2, u^2 - u^3) = 1/30 along e_1 (su(2), B = I, k = 1)."},
    {"extended-jacobi",
     "Jacobi identity of the centrally extended loop algebra [(f, a), (g, b)] = ([f, g], omega(f, g))."},
    {"dalpha-action",
     "Infinitesimal action of based paths on the extended loop algebra: action property,\n"
     "derivation of the extended bracket, equivariance of d, and agreement with the adjoint\n"
     "action for loops."},
    {"kappa-cocycle",
     "Group 2-cocycle condition kappa(f, g) kappa(fg, h) = kappa(g, h) kappa(f, gh) with\n"
     "kappa(f, g) = exp(2ik int int <f^-1 df/dt, dg/dtheta g^-1>) on grid-sampled SU(2) paths of\n"
     "loops. The residual is O(h^2); the tolerance is --tol-quad at the configured grid."},
    {"ad-omega",
     "Ad_p^* omega = omega - d beta_p with beta_p(xi) = -2 int <xi, p^-1 p'> and\n"
     "d beta(xi, eta) = -beta([xi, eta]): |omega(Ad xi, Ad eta) - omega(xi, eta) - k beta_p([xi, eta])|\n"
     "on a sampled based path p. Tolerance --tol-quad."},
    {"kappa-conjugation",
     "kappa(p f1 p^-1, p f2 p^-1) = kappa(f1, f2) exp(ik int (beta_p(m(f1 f2)) - beta_p(m f1)\n"
     "- beta_p(m f2)) dt) with m(f) = f^-1 df/dt, conjugation pointwise in theta. Tolerance --tol-quad."},
    {"crossed-axioms",
     "Every bundled crossed module (G, H, d, alpha): d and each alpha(g) are homomorphisms, alpha\n"
     "is an action, d(alpha(g) h) = g d(h) g^-1 and alpha(d h1) h2 = h1 h2 h1^-1. Exhaustive."},
    {"two-group-axioms",
     "The strict 2-group of each bundled crossed module: s, t, i homomorphisms, composition\n"
     "defined exactly when s(m1) = t(m2), associativity, units, inverses and the interchange law\n"
     "on every composable quadruple. Exhaustive."},
    {"strict-exactness",
     "For each crossed module with injective d: E H -> (G, H) -> (G / d(H), 1) has image equal to\n"
     "kernel at every spot, on objects and on morphisms. For every fixture the identity has\n"
     "trivial strict kernel and the map to a point has everything as kernel."},
    {"extras",
     "int f (f - f^2)' dtheta = -1/6 for random splitting functions of degree <= 8, antisymmetry\n"
     "and multilinearity of every structure map, and the category laws of the 2-vector space\n"
     "underlying P_k g."},
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
  if (requested.empty()) throw ConfigError("no suite selected");
  std::vector<std::string> out;
  auto add = [&out](const std::string& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  for (const auto& r : requested) {
    if (r == "all") {
      for (const auto& n : suite_names()) add(n);
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), r) == suite_names().end())
      throw ConfigError("unknown suite '" + r + "'");
    add(r);
  }
  return out;
}

std::string describe(const std::string& suite) {
  for (const auto& s : kSuites)
    if (suite == s.name) return std::string(s.name) + "\n" + s.text + "\n";
  throw ConfigError("unknown suite '" + suite + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SplittingError*>(&e)) return kInvalidSplitting;
  if (dynamic_cast<const AlgebraLoadError*>(&e)) return kAlgebraLoadError;
  return kConfigError;
}

Json RunConfig::to_json() const {
  Json j;
  j["algebra"] = algebra;
  j["form_scale"] = form_scale;
  j["k"] = k;
  j["degree"] = degree;
  j["splitting"] = splitting;
  j["nt"] = nt;
  j["ntheta"] = ntheta;
  j["seed"] = seed;
  j["trials"] = trials;
  j["group_trials"] = group_trials;
  j["tol_exact"] = tol_exact;
  j["tol_quad"] = tol_quad;
  j["suites"] = suites;
  j["jobs"] = jobs;
  j["data_dir"] = data_dir;
  return j;
}

RunConfig RunConfig::from_json(const Json& j) {
  RunConfig c;
  try {
    c.algebra = j.at("algebra").get<std::string>();
    c.form_scale = j.at("form_scale").get<double>();
    c.k = j.at("k").get<double>();
    c.degree = j.at("degree").get<int>();
    c.splitting = j.at("splitting").get<std::string>();
    c.nt = j.at("nt").get<int>();
    c.ntheta = j.at("ntheta").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.trials = j.at("trials").get<int>();
    c.group_trials = j.at("group_trials").get<int>();
    c.tol_exact = j.at("tol_exact").get<double>();
    c.tol_quad = j.at("tol_quad").get<double>();
    c.suites = j.at("suites").get<std::vector<std::string>>();
    c.jobs = j.at("jobs").get<int>();
    c.data_dir = j.at("data_dir").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("report config is incomplete: ") + e.what());
  }
  return c;
}

ScalarPoly parse_splitting(const std::string& text) {
  ScalarPoly f;
  if (text == "linear") {
    f = ScalarPoly::linear();
  } else if (text == "smoothstep") {
    f = ScalarPoly(Eigen::Vector4d(0.0, 0.0, 3.0, -2.0));
  } else {
    const auto parts = split_csv(text);
    if (parts.empty()) throw SplittingError("empty splitting function");
    Eigen::VectorXd c(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::size_t used = 0;
      try {
        c[static_cast<Eigen::Index>(i)] = std::stod(parts[i], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != parts[i].size())
        throw SplittingError("splitting coefficient '" + parts[i] + "' is not a number");
    }
    f = ScalarPoly(c);
  }
  try {
    require_splitting(f);
  } catch (const InputError& e) {
    throw SplittingError(std::string("invalid splitting function '") + text + "': " + e.what());
  }
  return f;
}

AlgebraPtr load_configured_algebra(const RunConfig& cfg) { return load_algebra(cfg.algebra, cfg.form_scale); }

std::filesystem::path Ctx::data_dir() const {
  return cfg.data_dir.empty() ? std::filesystem::path(LIE2_DATA_DIR) : std::filesystem::path(cfg.data_dir);
}

void validate(const RunConfig& cfg) {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  require(cfg.trials > 0, "--trials must be positive");
  require(cfg.group_trials > 0, "--group-trials must be positive");
  require(cfg.tol_exact > 0 && std::isfinite(cfg.tol_exact), "--tol-exact must be a positive number");
  require(cfg.tol_quad > 0 && std::isfinite(cfg.tol_quad), "--tol-quad must be a positive number");
  require(cfg.degree >= 2, "--degree must be at least 2 (got " + std::to_string(cfg.degree) + ")");
  require(cfg.nt >= 4 && cfg.ntheta >= 4, "--nt and --ntheta must be at least 4");
  require(cfg.jobs >= 1, "--jobs must be at least 1");
  require(std::isfinite(cfg.k), "--k must be finite");
  require(std::isfinite(cfg.form_scale) && cfg.form_scale != 0.0, "--form-scale must be finite and nonzero");
  const auto suites = expand_suites(cfg.suites);
  load_configured_algebra(cfg);
  parse_splitting(cfg.splitting);
  const bool finite = std::any_of(suites.begin(), suites.end(), [](const std::string& s) {
    return s == "crossed-axioms" || s == "two-group-axioms" || s == "strict-exactness";
  });
  if (finite) {
    const std::filesystem::path dir = cfg.data_dir.empty() ? std::filesystem::path(LIE2_DATA_DIR) : std::filesystem::path(cfg.data_dir);
    require(std::filesystem::is_directory(dir / "crossed_modules"),
            "no crossed_modules directory under " + dir.string());
  }
}

std::optional<std::string> matrix_substitution_note(const RunConfig& cfg, const AlgebraPtr& g) {
  if (g->dim() == 3 && Su2Embedding::mismatch(*g, -2.0 * g->form()(0, 0)) <= 1e-12) return std::nullopt;
  return "algebra " + g->name() + " has no su(2) matrix realization; group-level suites use su2 with form scale " +
         Json(cfg.form_scale).dump();
}

std::vector<std::string> config_warnings(const RunConfig& cfg) {
  std::vector<std::string> w;
  if (cfg.k != std::round(cfg.k))
    w.push_back("k = " + Json(cfg.k).dump() +
                " is not an integer; the algebra-level checks still apply, the group-level cocycle is only "
                "single-valued for integer levels");
  const auto suites = expand_suites(cfg.suites);
  const bool group = std::any_of(suites.begin(), suites.end(), [](const std::string& s) {
    return s == "kappa-cocycle" || s == "ad-omega" || s == "kappa-conjugation";
  });
  if (group)
    if (auto note = matrix_substitution_note(cfg, load_configured_algebra(cfg))) w.push_back(*note);
  return w;
}

}  // namespace lie2::cli
