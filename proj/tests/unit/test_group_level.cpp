#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>

#include "lie2/error.hpp"
#include "lie2/kac_moody.hpp"
#include "lie2/su2_sampled.hpp"

using namespace lie2;
using boost::math::quadrature::gauss;

namespace {

GVector e(int i) { return GVector::Unit(3, i); }

Su2Embedding su2_emb(double scale = 1.0) { return Su2Embedding::for_algebra(make_su2(scale)); }

// Truncated power series; independent of the closed form.
Mat2 series_exp(const Mat2& A) {
  Mat2 term = Mat2::Identity(), sum = Mat2::Identity();
  for (int n = 1; n < 40; ++n) {
    term = term * A / static_cast<double>(n);
    sum += term;
  }
  return sum;
}

// f(t, theta) = exp(t sin(theta/2) X)
SampledPathOfLoops sine_loop(int n, const Eigen::Vector3d& X) {
  return SampledPathOfLoops::from_function(n, n, [X](double t, double th) {
    return su2_exp(t * std::sin(0.5 * th) * X);
  });
}

struct Fixture {
  LoopFamily f, g, h;
  PathFamily p;
  PolyPath xi, eta;
};

Fixture seeded(std::uint64_t seed, const AlgebraPtr& alg) {
  Rng rng = trial_rng(seed, 0);
  Fixture fx{LoopFamily::sample(rng, 1.0), LoopFamily::sample(rng, 1.0), LoopFamily::sample(rng, 1.0),
             PathFamily::sample(rng, 0.5), PolyPath::zero(alg, PathKind::Loop), PolyPath::zero(alg, PathKind::Loop)};
  fx.xi = PolyPath::sample(alg, PathKind::Loop, 4, rng);
  fx.eta = PolyPath::sample(alg, PathKind::Loop, 4, rng);
  return fx;
}

}  // namespace

TEST(Embedding, RealizesBracketAndForm) {
  for (double scale : {1.0, 0.5, 3.0}) {
    const auto emb = su2_emb(scale);
    EXPECT_DOUBLE_EQ(emb.trace_constant(), -2.0 * scale);
    Rng rng = trial_rng(7, 0);
    for (int t = 0; t < 20; ++t) {
      const GVector x = emb.algebra()->sample(rng), y = emb.algebra()->sample(rng);
      const Mat2 X = emb.embed(x), Y = emb.embed(y);
      EXPECT_LT((emb.coords(X) - x).norm(), 1e-15);
      EXPECT_LT((emb.coords(X * Y - Y * X) - emb.algebra()->bracket(x, y)).norm(), 1e-14);
      EXPECT_NEAR(emb.pairing(X, Y), emb.algebra()->pairing(x, y), 1e-14);
    }
  }
}

TEST(Embedding, RejectsWrongConstantAndAlgebra) {
  EXPECT_THROW(Su2Embedding(make_su2(), 1.0), InputError);
  EXPECT_THROW(Su2Embedding::for_algebra(make_so(4)), InputError);
  EXPECT_NO_THROW(Su2Embedding(make_su2(2.0), -4.0));
}

TEST(Su2Exp, MatchesPowerSeries) {
  const auto emb = su2_emb();
  Rng rng = trial_rng(11, 0);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Vector3d s(uniform(rng, -4, 4), uniform(rng, -4, 4), uniform(rng, -4, 4));
    const Mat2 M = su2_exp(s);
    EXPECT_LT((M - series_exp(emb.embed(s))).norm(), 1e-13);
    EXPECT_LT(unitarity_defect(M), 1e-14);
  }
  EXPECT_EQ(su2_exp(Eigen::Vector3d::Zero()), Mat2::Identity());
}

TEST(Su2Exp, ProjectionRestoresUnitarity) {
  Rng rng = trial_rng(12, 0);
  for (int t = 0; t < 20; ++t) {
    const Mat2 M = su2_exp(Eigen::Vector3d(uniform(rng), uniform(rng), uniform(rng)));
    Mat2 noisy = M;
    noisy(0, 1) += std::complex<double>(1e-7, -2e-7);
    EXPECT_LT(unitarity_defect(project_su2(noisy)), 1e-14);
    EXPECT_LT((project_su2(noisy) - M).norm(), 1e-6);
    EXPECT_LT((project_su2(M) - M).norm(), 1e-15);
  }
}

TEST(SampledPathOfLoops, ValidatesBoundary) {
  std::vector<Mat2> grid(5 * 5, Mat2::Identity());
  EXPECT_NO_THROW(SampledPathOfLoops(4, 4, grid));
  auto bad = grid;
  bad[2] = su2_exp(Eigen::Vector3d(0.1, 0, 0));  // f(0, theta_2)
  EXPECT_THROW(SampledPathOfLoops(4, 4, bad), InputError);
  bad = grid;
  bad[2 * 5 + 4] = su2_exp(Eigen::Vector3d(0.1, 0, 0));  // f(t_2, 2pi)
  EXPECT_THROW(SampledPathOfLoops(4, 4, bad), InputError);
  bad = grid;
  bad[6] = 2.0 * Mat2::Identity();
  EXPECT_THROW(SampledPathOfLoops(4, 4, bad), InputError);
  EXPECT_THROW(SampledPathOfLoops(4, 4, std::vector<Mat2>(3, Mat2::Identity())), InputError);
}

TEST(SampledPathOfLoops, ProductsStayUnitary) {
  const auto fx = seeded(3, make_su2());
  const auto f = fx.f.grid(64, 64), g = fx.g.grid(64, 64);
  const auto p = fx.p.grid(64);
  auto acc = f;
  for (int i = 0; i < 20; ++i) acc = (acc * g).conjugated_by(p);
  EXPECT_LE(acc.max_unitarity_defect(), 1e-9);
}

TEST(SampledPathOfLoops, GridMismatchThrows) {
  const auto emb = su2_emb();
  const auto a = SampledPathOfLoops::identity(8, 8), b = SampledPathOfLoops::identity(8, 16);
  EXPECT_THROW(a * b, InputError);
  EXPECT_THROW(kappa(emb, a, b, 1.0), InputError);
  EXPECT_THROW(a.conjugated_by(SampledGroupPath::from_function(16, [](double) { return Mat2::Identity(); })),
               InputError);
}

TEST(MaurerCartan, ExponentialOfSineLoop) {
  // f = exp(t sin(theta/2) X): f^{-1} f_t = sin(theta/2) X and f_theta f^{-1} = (t/2) cos(theta/2) X
  const auto emb = su2_emb();
  const Eigen::Vector3d X(0.3, -0.8, 0.5);
  double prev_t = 0, prev_th = 0;
  for (int n : {32, 64, 128}) {
    const auto f = sine_loop(n, X);
    const SampledField mt = maurer_cartan_t(emb, f);
    const SampledField mth = maurer_cartan_theta_right(emb, f);
    double et = 0, eth = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const double t = kTwoPi * i / n, th = kTwoPi * j / n;
        et = std::max(et, (mt(i, j) - std::sin(0.5 * th) * GVector(X)).norm());
        eth = std::max(eth, (mth(i, j) - 0.5 * t * std::cos(0.5 * th) * GVector(X)).norm());
      }
    EXPECT_LT(mt.max_projection_defect, 1e-2);
    if (prev_t > 0) {
      EXPECT_GT(prev_t / et, 3.0);
      EXPECT_GT(prev_th / eth, 3.0);
    }
    prev_t = et;
    prev_th = eth;
  }
  EXPECT_LT(prev_t, 1e-2);
}

TEST(MaurerCartan, NeedsFourIntervals) {
  const auto emb = su2_emb();
  EXPECT_THROW(maurer_cartan_t(emb, SampledPathOfLoops::identity(2, 8)), InputError);
  EXPECT_THROW(maurer_cartan_theta_right(emb, SampledPathOfLoops::identity(8, 3)), InputError);
}

TEST(Kappa, TrivialArgumentsAndZeroLevel) {
  const auto emb = su2_emb();
  const auto fx = seeded(5, emb.algebra());
  const auto f = fx.f.grid(32, 32), g = fx.g.grid(32, 32);
  const auto one = SampledPathOfLoops::identity(32, 32);
  EXPECT_EQ(kappa_phase(emb, f, one, 1.0), 0.0);
  EXPECT_EQ(kappa_phase(emb, one, g, 1.0), 0.0);
  EXPECT_EQ(kappa(emb, f, g, 0.0), std::complex<double>(1.0, 0.0));
  EXPECT_EQ(kappa_cocycle_residual(emb, f, g, fx.h.grid(32, 32), 0.0), 0.0);
  EXPECT_LT(kappa_cocycle_residual(emb, one, f, g, 2.0), 1e-14);
  EXPECT_LT(kappa_cocycle_residual(emb, f, one, g, 2.0), 1e-14);
  EXPECT_LT(kappa_cocycle_residual(emb, f, g, one, 2.0), 1e-14);
}

TEST(Kappa, ScalesWithLevel) {
  const auto emb = su2_emb();
  const auto fx = seeded(6, emb.algebra());
  const auto f = fx.f.grid(32, 32), g = fx.g.grid(32, 32);
  EXPECT_NEAR(kappa_phase(emb, f, g, -2.0), -2.0 * kappa_phase(emb, f, g, 1.0), 1e-13);
}

TEST(Kappa, MatchesRefinedGrid) {
  const auto emb = su2_emb();
  const auto fx = seeded(8, emb.algebra());
  const std::complex<double> coarse = kappa(emb, fx.f.grid(128, 128), fx.g.grid(128, 128), 1.0);
  const std::complex<double> fine = kappa(emb, fx.f.grid(512, 512), fx.g.grid(512, 512), 1.0);
  EXPECT_LT(std::abs(coarse - fine), 1e-4);
}

TEST(Kappa, OneParameterLoopsClosedForm) {
  // f = exp(a(t) sin(theta/2) X), g = exp(b(t) sin(theta) Y) with a = (t/2pi)^2, b = t/2pi:
  // f^{-1}f_t = a' sin(theta/2) X and g_theta g^{-1} = b cos(theta) Y.
  const auto emb = su2_emb();
  const GVector X = e(0) + 0.5 * e(2), Y = e(0) - e(1);
  const Eigen::Vector3d x = X, y = Y;
  const double a_dot_b = gauss<double, 20>::integrate(
      [](double t) { return (2.0 * t / (kTwoPi * kTwoPi)) * (t / kTwoPi); }, 0.0, kTwoPi);
  const double angular = gauss<double, 30>::integrate(
      [](double th) { return std::sin(0.5 * th) * std::cos(th); }, 0.0, kTwoPi);
  const double oracle = 2.0 * emb.algebra()->pairing(X, Y) * a_dot_b * angular;
  ASSERT_GT(std::abs(oracle), 0.1);
  const auto f = SampledPathOfLoops::from_function(256, 256, [x](double t, double th) {
    return su2_exp(std::pow(t / kTwoPi, 2) * std::sin(0.5 * th) * x);
  });
  const auto g = SampledPathOfLoops::from_function(256, 256, [y](double t, double th) {
    return su2_exp((t / kTwoPi) * std::sin(th) * y);
  });
  EXPECT_NEAR(kappa_phase(emb, f, g, 1.0), oracle, 1e-3);
}

TEST(BetaP, TrivialCases) {
  const auto emb = su2_emb();
  const auto alg = emb.algebra();
  Rng rng = trial_rng(9, 0);
  const PolyPath xi = PolyPath::sample(alg, PathKind::Loop, 4, rng);
  const auto one = SampledGroupPath::from_function(64, [](double) { return Mat2::Identity(); });
  EXPECT_EQ(beta_p(emb, one, xi), 0.0);
  const auto p = PathFamily::sample(rng, 1.0).grid(64);
  EXPECT_EQ(beta_p(emb, p, PolyPath::zero(alg, PathKind::Loop)), 0.0);
  EXPECT_THROW(beta_p(emb, p, sample_on_grid(xi, 32)), InputError);
}

TEST(BetaP, ExponentialPathClosedForm) {
  // p = exp(s(theta) X) has p^{-1}p' = s'(theta) X, so beta_p(xi) = -2 int s' <xi, X> dtheta.
  const auto emb = su2_emb();
  const auto alg = emb.algebra();
  Rng rng = trial_rng(10, 0);
  const Eigen::Vector3d X(0.2, 0.45, -0.1);
  const auto s = [](double th) {
    const double u = th / kTwoPi;
    return 1.5 * u - 0.7 * u * u + 2.0 * u * u * u;
  };
  const auto ds = [](double th) {
    const double u = th / kTwoPi;
    return (1.5 - 1.4 * u + 6.0 * u * u) / kTwoPi;
  };
  const auto p = SampledGroupPath::from_function(512, [&](double th) { return su2_exp(s(th) * X); });
  // loops with xi'(0) = xi'(2pi) = 0, so the trapezoid rule is fourth order and the
  // Maurer-Cartan finite differences are what is measured
  const ScalarPoly bump((Eigen::VectorXd(6) << 0.0, 0.0, 1.0, -1.0, -1.0, 1.0).finished());  // u^2 (1-u)^2 (1+u)
  for (int t = 0; t < 5; ++t) {
    const GVector dir = alg->sample(rng);
    const PolyPath xi = PolyPath::times(alg, 4.0 * dir, bump).as(PathKind::Loop);
    const double oracle = -2.0 * gauss<double, 20>::integrate(
                                     [&](double th) { return ds(th) * alg->pairing(xi.at(th / kTwoPi), GVector(X)); },
                                     0.0, kTwoPi);
    EXPECT_NEAR(beta_p(emb, p, xi), oracle, 1e-6);
  }
}

TEST(OmegaSampled, MatchesExactPolynomialOmega) {
  const auto emb = su2_emb();
  const auto alg = emb.algebra();
  Rng rng = trial_rng(13, 0);
  for (int t = 0; t < 5; ++t) {
    const PolyPath xi = PolyPath::sample(alg, PathKind::Loop, 4, rng);
    const PolyPath eta = PolyPath::sample(alg, PathKind::Loop, 4, rng);
    EXPECT_NEAR(omega_sampled(emb, sample_on_grid(xi, 512), sample_on_grid(eta, 512), 1.5), omega(xi, eta, 1.5),
                1e-5);
  }
}

TEST(OmegaSampled, SmallAmplitudeGroupLoops) {
  // exp(eps xi) has skew part eps xi + O(eps^3); its rescaled coordinates reproduce omega to O(eps^2).
  const auto emb = su2_emb();
  const auto alg = emb.algebra();
  Rng rng = trial_rng(14, 0);
  const PolyPath xi = PolyPath::sample(alg, PathKind::Loop, 4, rng);
  const PolyPath eta = PolyPath::sample(alg, PathKind::Loop, 4, rng);
  const double exact = omega(xi, eta, 1.0);
  const int n = 1024;
  double prev = 0;
  for (double eps : {0.2, 0.1, 0.05}) {
    auto via_group = [&](const PolyPath& z) {
      std::vector<GVector> out;
      for (const GVector& v : sample_on_grid(z, n)) out.push_back(emb.coords(su2_exp(eps * v)) / eps);
      return out;
    };
    const double err = std::abs(omega_sampled(emb, via_group(xi), via_group(eta), 1.0) - exact);
    EXPECT_LT(err, 0.05 * eps * eps + 1e-5);
    if (prev > 0) EXPECT_GT(prev / err, 3.0);
    prev = err;
  }
}

TEST(AdOmega, TrivialCases) {
  const auto emb = su2_emb();
  const auto fx = seeded(15, emb.algebra());
  const auto one = SampledGroupPath::from_function(256, [](double) { return Mat2::Identity(); });
  EXPECT_LT(ad_omega_identity_residual(emb, one, fx.xi, fx.eta, 1.0), 1e-13);
  EXPECT_LT(ad_omega_identity_residual(emb, fx.p.grid(256), fx.xi, fx.xi, 1.0), 1e-4);
}

TEST(KappaConjugation, TrivialCases) {
  const auto emb = su2_emb();
  const auto fx = seeded(16, emb.algebra());
  const auto f = fx.f.grid(32, 32);
  const auto one_path = SampledGroupPath::from_function(32, [](double) { return Mat2::Identity(); });
  EXPECT_LT(kappa_conjugation_identity_residual(emb, one_path, f, fx.g.grid(32, 32), 1.0), 1e-13);
  EXPECT_LT(kappa_conjugation_identity_residual(emb, fx.p.grid(32), f, SampledPathOfLoops::identity(32, 32), 1.0),
            1e-13);
}

TEST(GroupLevel, SecondOrderConvergence) {
  const auto emb = su2_emb();
  for (std::uint64_t seed : {42u, 43u}) {
    const auto fx = seeded(seed, emb.algebra());
    double prev[3] = {0, 0, 0};
    for (int n : {64, 128, 256}) {
      const auto f = fx.f.grid(n, n), g = fx.g.grid(n, n), h = fx.h.grid(n, n);
      const auto p = fx.p.grid(n);
      const double r[3] = {kappa_cocycle_residual(emb, f, g, h, 1.0),
                           ad_omega_identity_residual(emb, p, fx.xi, fx.eta, 1.0),
                           kappa_conjugation_identity_residual(emb, p, f, g, 1.0)};
      for (int c = 0; c < 3; ++c) {
        if (prev[c] > 0) {
          EXPECT_GE(prev[c] / r[c], 3.0) << "check " << c << " n=" << n;
          EXPECT_LE(prev[c] / r[c], 5.0) << "check " << c << " n=" << n;
        }
        prev[c] = r[c];
      }
      if (n == 256) {
        EXPECT_LE(r[0], 2.5e-4);
        EXPECT_LE(r[2], 1e-3);
      }
    }
  }
}

TEST(GroupLevel, ScaledFormKeepsIdentities) {
  const auto emb = su2_emb(0.5);
  const auto fx = seeded(44, emb.algebra());
  const auto f = fx.f.grid(128, 128), g = fx.g.grid(128, 128), h = fx.h.grid(128, 128);
  EXPECT_LT(kappa_cocycle_residual(emb, f, g, h, 2.0), 1e-3);
  EXPECT_LT(kappa_conjugation_identity_residual(emb, fx.p.grid(128), f, g, 2.0), 1e-3);
}
