#include "lie2/su2_sampled.hpp"

#include <cmath>
#include <string>

#include "lie2/error.hpp"

namespace lie2 {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

const std::array<Mat2, 3>& pauli() {
  static const std::array<Mat2, 3> s = [] {
    std::array<Mat2, 3> m;
    m[0] << 0.0, 1.0, 1.0, 0.0;
    m[1] << 0.0, -kI, kI, 0.0;
    m[2] << 1.0, 0.0, 0.0, -1.0;
    return m;
  }();
  return s;
}

const std::array<Mat2, 3>& su2_basis() {
  static const std::array<Mat2, 3> e = [] {
    std::array<Mat2, 3> m;
    for (int a = 0; a < 3; ++a) m[static_cast<std::size_t>(a)] = -0.5 * kI * pauli()[static_cast<std::size_t>(a)];
    return m;
  }();
  return e;
}

bool is_identity(const Mat2& M) { return M == Mat2::Identity(); }

// second-order first derivative at index i of a sequence of N+1 samples with spacing h
template <class T, class Get>
T finite_difference(Get x, int i, int n, double h) {
  if (i == 0) return T((-3.0 * x(0) + 4.0 * x(1) - x(2)) / (2.0 * h));
  if (i == n) return T((3.0 * x(n) - 4.0 * x(n - 1) + x(n - 2)) / (2.0 * h));
  return T((x(i + 1) - x(i - 1)) / (2.0 * h));
}

double trapezoid_weight(int i, int n) { return (i == 0 || i == n) ? 0.5 : 1.0; }

void require_min_intervals(int n, const char* what) {
  if (n < 4) throw InputError(std::string(what) + " needs at least 4 grid intervals");
}

void require_same_grid(const SampledPathOfLoops& f, const SampledPathOfLoops& g) {
  if (f.nt() != g.nt() || f.ntheta() != g.ntheta())
    throw InputError("grid mismatch: " + std::to_string(f.nt()) + "x" + std::to_string(f.ntheta()) + " vs " +
                     std::to_string(g.nt()) + "x" + std::to_string(g.ntheta()));
}

void require_theta_grid(const SampledGroupPath& p, int ntheta) {
  if (p.intervals() != ntheta)
    throw InputError("grid mismatch: path has " + std::to_string(p.intervals()) + " intervals, expected " +
                     std::to_string(ntheta));
}

}  // namespace

// ---------------------------------------------------------------------------
// embedding
// ---------------------------------------------------------------------------

double Su2Embedding::mismatch(const LieAlgebra& g, double trace_constant) {
  if (g.dim() != 3) return std::numeric_limits<double>::infinity();
  const auto& E = su2_basis();
  double worst = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Mat2& Ea = E[static_cast<std::size_t>(a)];
      const Mat2& Eb = E[static_cast<std::size_t>(b)];
      Mat2 expected = Mat2::Zero();
      for (int k = 0; k < 3; ++k) expected += g.c(a, b, k) * E[static_cast<std::size_t>(k)];
      worst = std::max(worst, (Ea * Eb - Eb * Ea - expected).norm());
      worst = std::max(worst, std::abs(trace_constant * (Ea * Eb).trace().real() - g.form()(a, b)));
    }
  return worst;
}

Su2Embedding::Su2Embedding(AlgebraPtr g, double trace_constant) : g_(std::move(g)), c_(trace_constant) {
  if (!g_) throw InputError("Su2Embedding needs an algebra");
  const double m = mismatch(*g_, c_);
  if (!(m <= 1e-12))
    throw InputError("algebra " + g_->name() + " is not realized by the su(2) matrix basis with trace constant " +
                     std::to_string(c_) + " (mismatch " + std::to_string(m) + ")");
}

Su2Embedding Su2Embedding::for_algebra(AlgebraPtr g) {
  if (!g || g->dim() != 3) throw InputError("the matrix layer needs a 3-dimensional algebra");
  const double c = -2.0 * g->form()(0, 0);
  return Su2Embedding(std::move(g), c);
}

Mat2 Su2Embedding::embed(const GVector& x) const {
  if (x.size() != 3) throw InputError("su(2) coordinates must have length 3");
  const auto& E = su2_basis();
  return x[0] * E[0] + x[1] * E[1] + x[2] * E[2];
}

GVector Su2Embedding::coords(const Mat2& A) const {
  const auto& E = su2_basis();
  GVector x(3);
  // tr(E_a E_b) = -delta_ab / 2
  for (int a = 0; a < 3; ++a) x[a] = -2.0 * (A * E[static_cast<std::size_t>(a)]).trace().real();
  return x;
}

Mat2 su2_exp(const Eigen::Vector3d& s) {
  const double r = s.norm();
  if (r == 0.0) return Mat2::Identity();
  const Eigen::Vector3d n = s / r;
  const double c = std::cos(0.5 * r), sn = std::sin(0.5 * r);
  Mat2 M;
  M << cd(c, -sn * n[2]), cd(-sn * n[1], -sn * n[0]), cd(sn * n[1], -sn * n[0]), cd(c, sn * n[2]);
  return M;
}

Mat2 project_su2(const Mat2& M) {
  const cd a = 0.5 * (M(0, 0) + std::conj(M(1, 1)));
  const cd b = 0.5 * (M(1, 0) - std::conj(M(0, 1)));
  const double r = std::sqrt(std::norm(a) + std::norm(b));
  if (r == 0.0) throw InputError("cannot project a matrix with vanishing SU(2) part");
  Mat2 P;
  P << a / r, -std::conj(b) / r, b / r, std::conj(a) / r;
  return P;
}

double unitarity_defect(const Mat2& M) {
  return (M * M.adjoint() - Mat2::Identity()).norm() + std::abs(M.determinant() - 1.0);
}

// ---------------------------------------------------------------------------
// sampled objects
// ---------------------------------------------------------------------------

SampledGroupPath::SampledGroupPath(std::vector<Mat2> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw InputError("a sampled path needs at least one interval");
  if (!is_identity(samples_[0])) throw InputError("a based path must start exactly at the identity");
  for (std::size_t j = 0; j < samples_.size(); ++j)
    if (!(unitarity_defect(samples_[j]) <= 1e-10))
      throw InputError("sample " + std::to_string(j) + " is not in SU(2)");
}

SampledGroupPath SampledGroupPath::from_function(int n, const std::function<Mat2(double)>& p) {
  if (n < 1) throw InputError("a sampled path needs at least one interval");
  std::vector<Mat2> s;
  s.reserve(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) s.push_back(p(kTwoPi * j / n));
  return SampledGroupPath(std::move(s));
}

SampledPathOfLoops::SampledPathOfLoops(int nt, int ntheta, std::vector<Mat2> grid)
    : nt_(nt), ntheta_(ntheta), grid_(std::move(grid)) {
  if (nt < 1 || ntheta < 1) throw InputError("grid needs at least one interval per axis");
  if (grid_.size() != static_cast<std::size_t>((nt + 1) * (ntheta + 1))) throw InputError("grid has the wrong size");
  for (int j = 0; j <= ntheta; ++j)
    if (!is_identity((*this)(0, j))) throw InputError("f(0, theta) must be exactly the identity");
  for (int i = 0; i <= nt; ++i) {
    if (!is_identity((*this)(i, 0))) throw InputError("f(t, 0) must be exactly the identity");
    if (((*this)(i, ntheta) - Mat2::Identity()).norm() > 1e-10)
      throw InputError("f(t, 2pi) must be the identity (row " + std::to_string(i) + ")");
  }
  const double defect = max_unitarity_defect();
  if (!(defect <= 1e-10)) throw InputError("grid leaves SU(2) (defect " + std::to_string(defect) + ")");
}

SampledPathOfLoops SampledPathOfLoops::from_function(int nt, int ntheta,
                                                     const std::function<Mat2(double, double)>& f) {
  if (nt < 1 || ntheta < 1) throw InputError("grid needs at least one interval per axis");
  std::vector<Mat2> g;
  g.reserve(static_cast<std::size_t>((nt + 1) * (ntheta + 1)));
  for (int i = 0; i <= nt; ++i)
    for (int j = 0; j <= ntheta; ++j) g.push_back(f(kTwoPi * i / nt, kTwoPi * j / ntheta));
  return SampledPathOfLoops(nt, ntheta, std::move(g));
}

SampledPathOfLoops SampledPathOfLoops::identity(int nt, int ntheta) {
  return SampledPathOfLoops(nt, ntheta,
                            std::vector<Mat2>(static_cast<std::size_t>((nt + 1) * (ntheta + 1)), Mat2::Identity()));
}

SampledPathOfLoops operator*(const SampledPathOfLoops& f, const SampledPathOfLoops& g) {
  require_same_grid(f, g);
  std::vector<Mat2> out(f.grid_.size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    const Mat2& a = f.grid_[c];
    const Mat2& b = g.grid_[c];
    out[c] = is_identity(a) ? b : is_identity(b) ? a : project_su2(a * b);
  }
  return SampledPathOfLoops(f.nt_, f.ntheta_, std::move(out));
}

SampledPathOfLoops SampledPathOfLoops::conjugated_by(const SampledGroupPath& p) const {
  require_theta_grid(p, ntheta_);
  std::vector<Mat2> out(grid_.size());
  for (int i = 0; i <= nt_; ++i)
    for (int j = 0; j <= ntheta_; ++j) {
      const Mat2& a = (*this)(i, j);
      out[static_cast<std::size_t>(i * (ntheta_ + 1) + j)] =
          is_identity(a) ? a : project_su2(p[j] * a * p[j].adjoint());
    }
  return SampledPathOfLoops(nt_, ntheta_, std::move(out));
}

double SampledPathOfLoops::max_unitarity_defect() const {
  double worst = 0.0;
  for (const Mat2& M : grid_) worst = std::max(worst, unitarity_defect(M));
  return worst;
}

// ---------------------------------------------------------------------------
// Maurer-Cartan forms
// ---------------------------------------------------------------------------

namespace {

void store(const Su2Embedding& emb, SampledField& out, const Mat2& X) {
  const GVector x = emb.coords(X);
  out.max_projection_defect = std::max(out.max_projection_defect, (X - emb.embed(x)).norm());
  out.values.push_back(x);
}

}  // namespace

SampledField maurer_cartan_t(const Su2Embedding& emb, const SampledPathOfLoops& f) {
  require_min_intervals(f.nt(), "maurer_cartan_t");
  SampledField out;
  out.nt = f.nt();
  out.ntheta = f.ntheta();
  out.values.reserve(static_cast<std::size_t>((f.nt() + 1) * (f.ntheta() + 1)));
  for (int i = 0; i <= f.nt(); ++i)
    for (int j = 0; j <= f.ntheta(); ++j) {
      const Mat2 df = finite_difference<Mat2>([&](int r) { return f(r, j); }, i, f.nt(), f.dt());
      store(emb, out, f(i, j).adjoint() * df);
    }
  return out;
}

SampledField maurer_cartan_theta_right(const Su2Embedding& emb, const SampledPathOfLoops& g) {
  require_min_intervals(g.ntheta(), "maurer_cartan_theta_right");
  SampledField out;
  out.nt = g.nt();
  out.ntheta = g.ntheta();
  out.values.reserve(static_cast<std::size_t>((g.nt() + 1) * (g.ntheta() + 1)));
  for (int i = 0; i <= g.nt(); ++i)
    for (int j = 0; j <= g.ntheta(); ++j) {
      const Mat2 dg = finite_difference<Mat2>([&](int c) { return g(i, c); }, j, g.ntheta(), g.dtheta());
      store(emb, out, dg * g(i, j).adjoint());
    }
  return out;
}

std::vector<GVector> maurer_cartan(const Su2Embedding& emb, const SampledGroupPath& p) {
  require_min_intervals(p.intervals(), "maurer_cartan");
  std::vector<GVector> out;
  out.reserve(p.samples().size());
  for (int j = 0; j <= p.intervals(); ++j) {
    const Mat2 dp = finite_difference<Mat2>([&](int c) { return p[c]; }, j, p.intervals(), p.step());
    out.push_back(emb.coords(p[j].adjoint() * dp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// cocycles
// ---------------------------------------------------------------------------

double kappa_phase(const Su2Embedding& emb, const SampledPathOfLoops& f, const SampledPathOfLoops& g, double k) {
  require_same_grid(f, g);
  if (k == 0.0) return 0.0;
  const SampledField a = maurer_cartan_t(emb, f);
  const SampledField b = maurer_cartan_theta_right(emb, g);
  const LieAlgebra& alg = *emb.algebra();
  double total = 0.0;
  for (int i = 0; i <= f.nt(); ++i) {
    double row = 0.0;
    for (int j = 0; j <= f.ntheta(); ++j) row += trapezoid_weight(j, f.ntheta()) * alg.pairing(a(i, j), b(i, j));
    total += trapezoid_weight(i, f.nt()) * row;
  }
  return 2.0 * k * total * f.dt() * f.dtheta();
}

std::complex<double> kappa(const Su2Embedding& emb, const SampledPathOfLoops& f, const SampledPathOfLoops& g,
                           double k) {
  return std::polar(1.0, kappa_phase(emb, f, g, k));
}

double kappa_cocycle_residual(const Su2Embedding& emb, const SampledPathOfLoops& f, const SampledPathOfLoops& g,
                              const SampledPathOfLoops& h, double k) {
  const SampledPathOfLoops fg = f * g, gh = g * h;
  return std::abs(kappa(emb, f, g, k) * kappa(emb, fg, h, k) - kappa(emb, g, h, k) * kappa(emb, f, gh, k));
}

std::vector<GVector> sample_on_grid(const PolyPath& xi, int n) {
  if (n < 1) throw InputError("grid needs at least one interval");
  std::vector<GVector> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) out.push_back(xi.at(static_cast<double>(j) / n));
  return out;
}

double beta_p(const Su2Embedding& emb, const SampledGroupPath& p, const std::vector<GVector>& xi) {
  require_theta_grid(p, static_cast<int>(xi.size()) - 1);
  const std::vector<GVector> m = maurer_cartan(emb, p);
  const LieAlgebra& alg = *emb.algebra();
  const int n = p.intervals();
  double s = 0.0;
  for (int j = 0; j <= n; ++j) s += trapezoid_weight(j, n) * alg.pairing(xi[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(j)]);
  return -2.0 * s * p.step();
}

double beta_p(const Su2Embedding& emb, const SampledGroupPath& p, const PolyPath& xi) {
  return beta_p(emb, p, sample_on_grid(xi, p.intervals()));
}

double omega_sampled(const Su2Embedding& emb, const std::vector<GVector>& xi, const std::vector<GVector>& eta,
                     double k) {
  if (xi.size() != eta.size()) throw InputError("grid mismatch in omega_sampled");
  const int n = static_cast<int>(xi.size()) - 1;
  require_min_intervals(n, "omega_sampled");
  const double h = kTwoPi / n;
  const LieAlgebra& alg = *emb.algebra();
  double s = 0.0;
  for (int j = 0; j <= n; ++j) {
    const GVector d = finite_difference<GVector>([&](int c) { return eta[static_cast<std::size_t>(c)]; }, j, n, h);
    s += trapezoid_weight(j, n) * alg.pairing(xi[static_cast<std::size_t>(j)], d);
  }
  return 2.0 * k * s * h;
}

double ad_omega_identity_residual(const Su2Embedding& emb, const SampledGroupPath& p, const PolyPath& xi,
                                  const PolyPath& eta, double k) {
  require_loop(xi, "ad_omega_identity_residual");
  require_loop(eta, "ad_omega_identity_residual");
  const int n = p.intervals();
  const std::vector<GVector> xs = sample_on_grid(xi, n), es = sample_on_grid(eta, n);
  std::vector<GVector> ad_x, ad_e, br;
  for (int j = 0; j <= n; ++j) {
    const auto J = static_cast<std::size_t>(j);
    ad_x.push_back(emb.coords(p[j] * emb.embed(xs[J]) * p[j].adjoint()));
    ad_e.push_back(emb.coords(p[j] * emb.embed(es[J]) * p[j].adjoint()));
    br.push_back(emb.algebra()->bracket(xs[J], es[J]));
  }
  return std::abs(omega_sampled(emb, ad_x, ad_e, k) - omega_sampled(emb, xs, es, k) - k * beta_p(emb, p, br));
}

double kappa_conjugation_identity_residual(const Su2Embedding& emb, const SampledGroupPath& p,
                                           const SampledPathOfLoops& f1, const SampledPathOfLoops& f2, double k) {
  require_same_grid(f1, f2);
  require_theta_grid(p, f1.ntheta());
  const double lhs = kappa_phase(emb, f1.conjugated_by(p), f2.conjugated_by(p), k);

  const SampledField m1 = maurer_cartan_t(emb, f1);
  const SampledField m2 = maurer_cartan_t(emb, f2);
  const SampledField m12 = maurer_cartan_t(emb, f1 * f2);
  const int nt = f1.nt(), nth = f1.ntheta();
  auto slice = [nth](const SampledField& m, int i) {
    return std::vector<GVector>(m.values.begin() + i * (nth + 1), m.values.begin() + (i + 1) * (nth + 1));
  };
  double corr = 0.0;
  for (int i = 0; i <= nt; ++i)
    corr += trapezoid_weight(i, nt) *
            (beta_p(emb, p, slice(m12, i)) - beta_p(emb, p, slice(m1, i)) - beta_p(emb, p, slice(m2, i)));
  corr *= f1.dt();
  const double rhs = kappa_phase(emb, f1, f2, k) + k * corr;
  return std::abs(std::polar(1.0, lhs) - std::polar(1.0, rhs));
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

LoopFamily LoopFamily::sample(Rng& rng, double amplitude) {
  LoopFamily f;
  f.amplitude = amplitude;
  for (double& c : f.c) c = uniform(rng);
  return f;
}

Eigen::Vector3d LoopFamily::exponent(double t, double theta) const {
  const double u = t / kTwoPi;
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  for (int a = 0; a < 3; ++a)
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n)
        s[a] += c[static_cast<std::size_t>(a * 4 + (m - 1) * 2 + (n - 1))] * std::pow(u, m) * std::sin(0.5 * n * theta);
  return amplitude * s;
}

SampledPathOfLoops LoopFamily::grid(int nt, int ntheta) const {
  return SampledPathOfLoops::from_function(nt, ntheta, [this](double t, double theta) {
    return su2_exp(exponent(t, theta));
  });
}

PathFamily PathFamily::sample(Rng& rng, double amplitude) {
  PathFamily p;
  p.amplitude = amplitude;
  for (double& c : p.c) c = uniform(rng);
  return p;
}

Eigen::Vector3d PathFamily::exponent(double theta) const {
  const double u = theta / kTwoPi;
  Eigen::Vector3d r = Eigen::Vector3d::Zero();
  for (int a = 0; a < 3; ++a)
    for (int d = 1; d <= 3; ++d) r[a] += c[static_cast<std::size_t>(a * 3 + d - 1)] * std::pow(u, d);
  return amplitude * r;
}

SampledGroupPath PathFamily::grid(int n) const {
  return SampledGroupPath::from_function(n, [this](double theta) { return su2_exp(exponent(theta)); });
}

}  // namespace lie2
