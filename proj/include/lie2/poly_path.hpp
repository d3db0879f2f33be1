#pragma once

#include <Eigen/Dense>
#include <json.hpp>

#include <numbers>

#include "lie2/algebra.hpp"
#include "lie2/rng.hpp"

namespace lie2 {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Real polynomial in u = theta / 2pi on [0, 1]; coeffs[d] multiplies u^d.
class ScalarPoly {
 public:
  ScalarPoly() : coeffs_(Eigen::VectorXd::Zero(1)) {}
  explicit ScalarPoly(Eigen::VectorXd coeffs);

  static ScalarPoly linear() { return ScalarPoly(Eigen::Vector2d(0.0, 1.0)); }
  static ScalarPoly monomial(int degree, double scale = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }

  double operator()(double u) const;
  /// Derivative with respect to theta, i.e. (1/2pi) d/du.
  ScalarPoly derivative() const;
  /// Exact integral over theta in [0, 2pi].
  double integral() const;

  friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator*(double s, const ScalarPoly& a);

 private:
  Eigen::VectorXd coeffs_;
};

/// A splitting function: f(0) = 0 and f(2pi) = 1 to within `tol`, else InputError.
void require_splitting(const ScalarPoly& f, double tol = 1e-12);

/// Seeded random admissible splitting function of the given degree (>= 1).
ScalarPoly sample_splitting(Rng& rng, int degree);

/// The universal integral int_0^{2pi} f (f - f^2)' dtheta, evaluated exactly; -1/6 for
/// every admissible f. Throws InputError when f violates the endpoint conditions.
double universal_integral(const ScalarPoly& f);

enum class PathKind { Free, Based, Loop };

/// g-valued polynomial path p(theta) = sum_d coeffs.col(d) u^d with u = theta / 2pi.
/// Based paths satisfy p(0) = 0; loops additionally p(2pi) = 0. Degrees grow under
/// products; nothing is ever truncated.
class PolyPath {
 public:
  PolyPath(AlgebraPtr algebra, Eigen::MatrixXd coeffs, PathKind kind);

  static PolyPath zero(AlgebraPtr algebra, PathKind kind);
  /// u^degree * x.
  static PolyPath monomial(AlgebraPtr algebra, int degree, const GVector& x);
  /// x * f for a scalar polynomial f; based when f(0) = 0.
  static PolyPath times(AlgebraPtr algebra, const GVector& x, const ScalarPoly& f);

  /// iid U[-1,1] coefficients up to `degree`, projected onto the endpoint constraints.
  static PolyPath sample(AlgebraPtr algebra, PathKind kind, int degree, Rng& rng);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Eigen::MatrixXd& coeffs() const { return coeffs_; }
  PathKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(coeffs_.rows()); }
  int degree() const { return static_cast<int>(coeffs_.cols()) - 1; }
  bool is_based() const { return kind_ != PathKind::Free; }
  bool is_loop() const { return kind_ == PathKind::Loop; }

  /// Value at u in [0, 1].
  GVector at(double u) const;
  /// p(2pi): row sums of the coefficients.
  GVector endpoint() const;

  /// sqrt(int_0^1 |p(u)|^2 du) in the Euclidean coordinate metric.
  double norm() const;

  /// Same coefficients with a different kind tag; validates the endpoint constraints.
  PolyPath as(PathKind kind, double tol = 1e-12) const;

  PolyPath& operator+=(const PolyPath& other);
  PolyPath& operator-=(const PolyPath& other);
  PolyPath& operator*=(double s);
  friend PolyPath operator+(PolyPath a, const PolyPath& b) { return a += b; }
  friend PolyPath operator-(PolyPath a, const PolyPath& b) { return a -= b; }
  friend PolyPath operator*(double s, PolyPath a) { return a *= s; }
  friend PolyPath operator-(PolyPath a) { return a *= -1.0; }

 private:
  void combine(const PolyPath& other, double sign);

  AlgebraPtr algebra_;
  Eigen::MatrixXd coeffs_;
  PathKind kind_;
};

/// p'(theta) = (1/2pi) dp/du; no endpoint guarantees on the result.
PolyPath derivative(const PolyPath& p);

/// Pointwise bracket [p,q](theta) = [p(theta), q(theta)], exactly antisymmetric.
PolyPath pointwise_bracket(const PolyPath& p, const PolyPath& q);

/// int_0^{2pi} <p(theta), q(theta)> dtheta by exact monomial integration.
double integral_pairing(const PolyPath& p, const PolyPath& q);

/// p(2pi).
inline GVector endpoint(const PolyPath& p) { return p.endpoint(); }

/// Element (l, c) of the centrally extended loop algebra, stored as a direct sum.
struct CentralVector {
  PolyPath loop;
  double c = 0.0;

  CentralVector(PolyPath l, double central);
  static CentralVector zero(AlgebraPtr algebra);
  static CentralVector sample(AlgebraPtr algebra, int degree, Rng& rng);

  double norm() const;

  CentralVector& operator+=(const CentralVector& o);
  CentralVector& operator-=(const CentralVector& o);
  CentralVector& operator*=(double s);
  friend CentralVector operator+(CentralVector a, const CentralVector& b) { return a += b; }
  friend CentralVector operator-(CentralVector a, const CentralVector& b) { return a -= b; }
  friend CentralVector operator*(double s, CentralVector a) { return a *= s; }
};

void require_loop(const PolyPath& p, const char* what);
void require_based(const PolyPath& p, const char* what);
void require_same_algebra(const PolyPath& p, const PolyPath& q);

nlohmann::ordered_json to_json(const PolyPath& p);
nlohmann::ordered_json to_json(const CentralVector& v);
nlohmann::ordered_json to_json(const ScalarPoly& f);
nlohmann::ordered_json to_json(const GVector& v);
inline nlohmann::ordered_json to_json(double x) { return x; }

}  // namespace lie2
