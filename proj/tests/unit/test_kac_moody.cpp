#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss.hpp>

#include "lie2/error.hpp"
#include "lie2/kac_moody.hpp"
#include "lie2/linfty.hpp"
#include "lie2/string_models.hpp"

using namespace lie2;
using boost::math::quadrature::gauss;

namespace {

GVector e(int i) { return GVector::Unit(3, i); }

PolyPath scalar_times(const AlgebraPtr& g, const GVector& x, std::initializer_list<double> c) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (double a : c) v[i++] = a;
  return PolyPath::times(g, x, ScalarPoly(v));
}

AlgebraPtr non_invariant() {
  Eigen::MatrixXd form = Eigen::MatrixXd::Identity(3, 3);
  form(2, 2) = 4.0;
  form(0, 2) = form(2, 0) = -0.5;
  return std::make_shared<const LieAlgebra>(make_su2()->with_form(form));
}

}  // namespace

TEST(Omega, FixtureValue) {
  const auto g = make_su2();
  const PolyPath f = scalar_times(g, e(0), {0.0, 1.0, -1.0});
  const PolyPath h = scalar_times(g, e(0), {0.0, 0.0, 1.0, -1.0});
  // 2 int_0^{2pi} <f, h'> dtheta = 2 int_0^1 f(u) dh/du du
  const double oracle =
      2.0 * gauss<double, 20>::integrate([](double u) { return (u - u * u) * (2 * u - 3 * u * u); }, 0.0, 1.0);
  EXPECT_NEAR(oracle, 1.0 / 30.0, 1e-15);
  EXPECT_NEAR(omega(f, h, 1.0), oracle, 1e-12);
  EXPECT_NEAR(omega(f, h, -3.0), -3.0 * oracle, 1e-12);
}

TEST(Omega, AntisymmetricAndOrthogonal) {
  const auto g = make_su2();
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const PolyPath f = PolyPath::sample(g, PathKind::Loop, 5, rng);
    const PolyPath h = PolyPath::sample(g, PathKind::Loop, 3, rng);
    EXPECT_NEAR(omega(f, f, 1.0), 0.0, 1e-14);
    EXPECT_NEAR(omega(f, h, 2.0), -omega(h, f, 2.0), 1e-13);
  }
  const PolyPath a = scalar_times(g, e(0), {0.0, 1.0, -1.0});
  const PolyPath b = scalar_times(g, e(1), {0.0, 1.0, 0.0, -1.0});
  EXPECT_EQ(omega(a, b, 1.0), 0.0);
}

TEST(Omega, RejectsNonLoops) {
  const auto g = make_su2();
  const PolyPath p = PolyPath::monomial(g, 1, e(0));
  const PolyPath l = scalar_times(g, e(0), {0.0, 1.0, -1.0});
  EXPECT_THROW(omega(p, l, 1.0), InputError);
  EXPECT_THROW(omega(l, p, 1.0), InputError);
  EXPECT_THROW(omega_cocycle_residual(l, l, p, 1.0), InputError);
}

TEST(Omega, CocycleCondition) {
  const auto g = make_su2();
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const PolyPath f = PolyPath::sample(g, PathKind::Loop, 4, rng);
    const PolyPath h = PolyPath::sample(g, PathKind::Loop, 4, rng);
    const PolyPath l = PolyPath::sample(g, PathKind::Loop, 4, rng);
    EXPECT_LE(omega_cocycle_residual(f, h, l, 1.0), 1e-10);
    EXPECT_LE(omega_cocycle_residual(f, f, l, 1.0), 1e-14);
  }
}

TEST(Omega, CocycleDetectsNonInvariantForm) {
  const auto g = non_invariant();
  Rng rng(3);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const PolyPath f = PolyPath::sample(g, PathKind::Loop, 4, rng);
    const PolyPath h = PolyPath::sample(g, PathKind::Loop, 4, rng);
    const PolyPath l = PolyPath::sample(g, PathKind::Loop, 4, rng);
    worst = std::max(worst, omega_cocycle_residual(f, h, l, 1.0));
  }
  EXPECT_GT(worst, 1e-4);
}

TEST(ExtendedBracket, CentralAndAntisymmetric) {
  const auto g = make_su2();
  Rng rng(4);
  const CentralVector a = CentralVector::sample(g, 4, rng), b = CentralVector::sample(g, 4, rng);
  const CentralVector central(PolyPath::zero(g, PathKind::Loop), 2.5);
  const CentralVector z = extended_bracket(central, b, 1.0);
  EXPECT_EQ(z.loop.norm(), 0.0);
  EXPECT_EQ(z.c, 0.0);
  const CentralVector ab = extended_bracket(a, b, 1.0), ba = extended_bracket(b, a, 1.0);
  EXPECT_LE((ab + ba).norm(), 1e-14);
}

TEST(ExtendedBracket, JacobiAndCrossCheckWithCocycle) {
  Rng rng(5);
  for (const auto& g : {make_su2(), non_invariant()}) {
    for (int t = 0; t < 100; ++t) {
      const CentralVector a = CentralVector::sample(g, 4, rng), b = CentralVector::sample(g, 4, rng),
                          c = CentralVector::sample(g, 4, rng);
      CentralVector s = extended_bracket(extended_bracket(a, b, 1.5), c, 1.5);
      s += extended_bracket(extended_bracket(b, c, 1.5), a, 1.5);
      s += extended_bracket(extended_bracket(c, a, 1.5), b, 1.5);
      // the loop part is the pointwise Jacobi identity; the central part is the cocycle sum
      EXPECT_LE(s.loop.norm(), 1e-13);
      const double cocycle = omega(pointwise_bracket(a.loop, b.loop), c.loop, 1.5) +
                             omega(pointwise_bracket(b.loop, c.loop), a.loop, 1.5) +
                             omega(pointwise_bracket(c.loop, a.loop), b.loop, 1.5);
      EXPECT_NEAR(s.c, cocycle, 1e-12);
      if (g->validate().ok()) EXPECT_LE(extended_jacobi_residual(a, b, c, 1.5), 1e-10);
    }
  }
}

TEST(Dalpha, KillsCentralElementsAndMatchesFormula) {
  const auto g = make_su2();
  Rng rng(6);
  const PolyPath p = PolyPath::sample(g, PathKind::Based, 4, rng);
  const CentralVector c(PolyPath::zero(g, PathKind::Loop), 3.0);
  const CentralVector r = dalpha(p, c, 1.0);
  EXPECT_EQ(r.loop.norm(), 0.0);
  EXPECT_EQ(r.c, 0.0);

  // central part against quadrature of 2k <p, l'> in u
  const CentralVector v = CentralVector::sample(g, 5, rng);
  auto val = [](const PolyPath& q, double u) {
    GVector s = GVector::Zero(3);
    for (int d = 0; d <= q.degree(); ++d) s += std::pow(u, d) * q.coeffs().col(d);
    return s;
  };
  auto dval = [](const PolyPath& q, double u) {
    GVector s = GVector::Zero(3);
    for (int d = 1; d <= q.degree(); ++d) s += d * std::pow(u, d - 1) * q.coeffs().col(d);
    return s;
  };
  const double oracle =
      2.0 * 0.7 * gauss<double, 20>::integrate([&](double u) { return val(p, u).dot(dval(v.loop, u)); }, 0.0, 1.0);
  EXPECT_NEAR(dalpha(p, v, 0.7).c, oracle, 1e-13);
  EXPECT_THROW(dalpha(PolyPath::monomial(g, 0, e(0)), v, 1.0), InputError);
}

TEST(Dalpha, IsTheActionOfThePathModel) {
  const auto g = make_su2();
  const auto pkg = make_pkg(g, 2.0);
  Rng rng(7);
  const PolyPath p = PolyPath::sample(g, PathKind::Based, 4, rng);
  const CentralVector v = CentralVector::sample(g, 4, rng);
  EXPECT_EQ((pkg->l2_01(p, v) - dalpha(p, v, 2.0)).norm(), 0.0);
}

TEST(Dalpha, ActionDerivationAndCrossedModuleResiduals) {
  const auto g = make_su2();
  Rng rng(8);
  for (double k : {1.0, -2.0}) {
    for (int t = 0; t < 100; ++t) {
      const PolyPath p1 = PolyPath::sample(g, PathKind::Based, 4, rng);
      const PolyPath p2 = PolyPath::sample(g, PathKind::Based, 3, rng);
      const PolyPath l = PolyPath::sample(g, PathKind::Loop, 4, rng);
      const CentralVector a = CentralVector::sample(g, 4, rng), b = CentralVector::sample(g, 4, rng);
      EXPECT_LE(dalpha_action_residual(p1, p2, a, k), 1e-10);
      EXPECT_LE(dalpha_derivation_residual(p1, a, b, k), 1e-10);
      EXPECT_LE(dalpha_equivariance_residual(p1, a, k), 1e-14);
      EXPECT_LE(dalpha_inner_residual(l, a, k), 1e-12);
    }
  }
}
