#pragma once

// Grid-sampled SU(2)-valued paths and paths of loops, and the group-level cocycle
// identities evaluated on them. theta and t both run over [0, 2pi] on uniform grids;
// derivatives are second-order central differences (one-sided second-order stencils at
// the ends) and integrals use the trapezoid rule, so every residual is O(h^2).

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "lie2/algebra.hpp"
#include "lie2/poly_path.hpp"
#include "lie2/rng.hpp"

namespace lie2 {

using Mat2 = Eigen::Matrix2cd;

/// su(2) inside 2x2 matrices: e_a -> E_a = -(i/2) sigma_a, so [E_1,E_2] = E_3 cyclically,
/// and <A,B> = trace_constant * Re tr(AB). With B = s I on g the matching constant is -2s.
class Su2Embedding {
 public:
  /// Throws InputError unless the E_a realize g's bracket and the trace pairing
  /// reproduces g's form on them (to 1e-12).
  Su2Embedding(AlgebraPtr g, double trace_constant);
  /// The constant -2 B(e_1, e_1), then validated.
  static Su2Embedding for_algebra(AlgebraPtr g);

  const AlgebraPtr& algebra() const { return g_; }
  double trace_constant() const { return c_; }

  Mat2 embed(const GVector& x) const;
  /// Coordinates of the traceless skew-Hermitian part of A.
  GVector coords(const Mat2& A) const;
  double pairing(const Mat2& A, const Mat2& B) const { return c_ * (A * B).trace().real(); }

  /// Largest bracket/pairing mismatch on basis elements.
  static double mismatch(const LieAlgebra& g, double trace_constant);

 private:
  AlgebraPtr g_;
  double c_;
};

/// exp(sum_a s_a E_a) in closed form: cos(|s|/2) I - i sin(|s|/2) s^.sigma.
Mat2 su2_exp(const Eigen::Vector3d& s);
/// Nearest SU(2) element of the form [[a, -conj b], [b, conj a]].
Mat2 project_su2(const Mat2& M);
/// |M M^dagger - I| + |det M - 1|.
double unitarity_defect(const Mat2& M);

/// p(theta_j), j = 0..N, with p(0) = I exactly.
class SampledGroupPath {
 public:
  explicit SampledGroupPath(std::vector<Mat2> samples);
  static SampledGroupPath from_function(int n, const std::function<Mat2(double theta)>& p);

  int intervals() const { return static_cast<int>(samples_.size()) - 1; }
  double step() const { return kTwoPi / intervals(); }
  const Mat2& operator[](int j) const { return samples_[static_cast<std::size_t>(j)]; }
  const std::vector<Mat2>& samples() const { return samples_; }

 private:
  std::vector<Mat2> samples_;
};

/// f(t_i, theta_j) on an (Nt+1) x (Ntheta+1) grid with f(0, .) = I and f(., 0) = I exactly,
/// and f(., 2pi) = I to 1e-10.
class SampledPathOfLoops {
 public:
  SampledPathOfLoops(int nt, int ntheta, std::vector<Mat2> grid);
  static SampledPathOfLoops from_function(int nt, int ntheta, const std::function<Mat2(double t, double theta)>& f);
  static SampledPathOfLoops identity(int nt, int ntheta);

  int nt() const { return nt_; }
  int ntheta() const { return ntheta_; }
  double dt() const { return kTwoPi / nt_; }
  double dtheta() const { return kTwoPi / ntheta_; }
  const Mat2& operator()(int i, int j) const { return grid_[static_cast<std::size_t>(i * (ntheta_ + 1) + j)]; }

  /// Pointwise product, re-projected to SU(2).
  friend SampledPathOfLoops operator*(const SampledPathOfLoops& f, const SampledPathOfLoops& g);
  /// p(theta) f(t,theta) p(theta)^{-1}; p must share the theta grid.
  SampledPathOfLoops conjugated_by(const SampledGroupPath& p) const;

  double max_unitarity_defect() const;

 private:
  int nt_, ntheta_;
  std::vector<Mat2> grid_;
};

/// g-valued field on the same grid.
struct SampledField {
  int nt = 0;
  int ntheta = 0;
  std::vector<GVector> values;
  /// Largest distance of f^{-1} df from su(2) before projection.
  double max_projection_defect = 0.0;

  const GVector& operator()(int i, int j) const { return values[static_cast<std::size_t>(i * (ntheta + 1) + j)]; }
};

/// f^{-1} df/dt; needs Nt >= 4.
SampledField maurer_cartan_t(const Su2Embedding& emb, const SampledPathOfLoops& f);
/// dg/dtheta g^{-1}; needs Ntheta >= 4.
SampledField maurer_cartan_theta_right(const Su2Embedding& emb, const SampledPathOfLoops& g);
/// p^{-1} dp/dtheta at every sample.
std::vector<GVector> maurer_cartan(const Su2Embedding& emb, const SampledGroupPath& p);

/// 2k int int <f^{-1} f_t, g_theta g^{-1}> dtheta dt; kappa = exp(i * phase).
double kappa_phase(const Su2Embedding& emb, const SampledPathOfLoops& f, const SampledPathOfLoops& g, double k);
std::complex<double> kappa(const Su2Embedding& emb, const SampledPathOfLoops& f, const SampledPathOfLoops& g, double k);

/// |kappa(f,g) kappa(fg,h) - kappa(g,h) kappa(f,gh)|.
double kappa_cocycle_residual(const Su2Embedding& emb, const SampledPathOfLoops& f, const SampledPathOfLoops& g,
                              const SampledPathOfLoops& h, double k);

/// beta_p(xi) = -2 int <xi, p^{-1} p'> dtheta by the trapezoid rule.
double beta_p(const Su2Embedding& emb, const SampledGroupPath& p, const std::vector<GVector>& xi);
double beta_p(const Su2Embedding& emb, const SampledGroupPath& p, const PolyPath& xi);

/// Samples of a path on the uniform theta grid with N intervals.
std::vector<GVector> sample_on_grid(const PolyPath& xi, int n);

/// 2k int <xi, eta'> dtheta from samples; eta' by finite differences.
double omega_sampled(const Su2Embedding& emb, const std::vector<GVector>& xi, const std::vector<GVector>& eta, double k);

/// |omega_k(Ad_p xi, Ad_p eta) - omega_k(xi, eta) - k beta_p([xi, eta])|. The sign follows
/// from (Ad_p eta)' = Ad_p(eta' + [p^{-1}p', eta]) and invariance of the form; it is the
/// coboundary relation with d beta(xi, eta) = -beta([xi, eta]) for left-invariant beta.
double ad_omega_identity_residual(const Su2Embedding& emb, const SampledGroupPath& p, const PolyPath& xi,
                                  const PolyPath& eta, double k);

/// |kappa(p f1 p^-1, p f2 p^-1) - kappa(f1,f2) exp(ik int (beta_p(m(f1 f2)) - beta_p(m f1) - beta_p(m f2)) dt)|
/// with m(f) = f^{-1} df/dt taken slice by slice in t.
double kappa_conjugation_identity_residual(const Su2Embedding& emb, const SampledGroupPath& p,
                                           const SampledPathOfLoops& f1, const SampledPathOfLoops& f2, double k);

/// Smooth seeded path of loops exp(sum_a s_a(t,theta) E_a) with
/// s_a = amplitude * sum_{m,n in {1,2}} c_amn (t/2pi)^m sin(n theta / 2), c_amn ~ U[-1,1].
struct LoopFamily {
  std::array<double, 12> c{};
  double amplitude = 1.0;

  static LoopFamily sample(Rng& rng, double amplitude);
  Eigen::Vector3d exponent(double t, double theta) const;
  SampledPathOfLoops grid(int nt, int ntheta) const;
};

/// Smooth seeded based path exp(sum_a r_a(theta) E_a) with r_a = amplitude * sum_{d=1..3} c_ad u^d.
struct PathFamily {
  std::array<double, 9> c{};
  double amplitude = 1.0;

  static PathFamily sample(Rng& rng, double amplitude);
  Eigen::Vector3d exponent(double theta) const;
  SampledGroupPath grid(int n) const;
};

}  // namespace lie2
