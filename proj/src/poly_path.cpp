#include "lie2/poly_path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lie2/error.hpp"

namespace lie2 {

// ---------------------------------------------------------------------------
// ScalarPoly
// ---------------------------------------------------------------------------

ScalarPoly::ScalarPoly(Eigen::VectorXd coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) coeffs_ = Eigen::VectorXd::Zero(1);
}

ScalarPoly ScalarPoly::monomial(int degree, double scale) {
  if (degree < 0) throw InputError("negative monomial degree");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(degree + 1);
  c[degree] = scale;
  return ScalarPoly(std::move(c));
}

double ScalarPoly::operator()(double u) const {
  double acc = 0.0;
  for (Eigen::Index d = coeffs_.size() - 1; d >= 0; --d) acc = acc * u + coeffs_[d];
  return acc;
}

ScalarPoly ScalarPoly::derivative() const {
  if (coeffs_.size() == 1) return ScalarPoly();
  Eigen::VectorXd c(coeffs_.size() - 1);
  for (Eigen::Index d = 1; d < coeffs_.size(); ++d) c[d - 1] = static_cast<double>(d) * coeffs_[d] / kTwoPi;
  return ScalarPoly(std::move(c));
}

double ScalarPoly::integral() const {
  double s = 0.0;
  for (Eigen::Index d = 0; d < coeffs_.size(); ++d) s += coeffs_[d] / static_cast<double>(d + 1);
  return kTwoPi * s;
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(std::max(a.coeffs_.size(), b.coeffs_.size()));
  c.head(a.coeffs_.size()) += a.coeffs_;
  c.head(b.coeffs_.size()) += b.coeffs_;
  return ScalarPoly(std::move(c));
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) { return a + (-1.0) * b; }

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i)
    for (Eigen::Index j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ScalarPoly(std::move(c));
}

ScalarPoly operator*(double s, const ScalarPoly& a) { return ScalarPoly(s * a.coeffs_); }

void require_splitting(const ScalarPoly& f, double tol) {
  const double at0 = f(0.0), at1 = f(1.0);
  if (std::abs(at0) > tol || std::abs(at1 - 1.0) > tol)
    throw InputError("splitting function needs f(0) = 0 and f(2pi) = 1, got f(0) = " +
                     std::to_string(at0) + ", f(2pi) = " + std::to_string(at1));
}

ScalarPoly sample_splitting(Rng& rng, int degree) {
  if (degree < 1) throw InputError("splitting function degree must be at least 1");
  Eigen::VectorXd c(degree + 1);
  c[0] = 0.0;
  for (int d = 1; d <= degree; ++d) c[d] = uniform(rng);
  // fix the value at u = 1 through the linear coefficient
  c[1] += 1.0 - c.sum();
  return ScalarPoly(std::move(c));
}

double universal_integral(const ScalarPoly& f) {
  require_splitting(f);
  const ScalarPoly g = f - f * f;
  return (f * g.derivative()).integral();
}

// ---------------------------------------------------------------------------
// PolyPath
// ---------------------------------------------------------------------------

namespace {

double coeff_scale(const Eigen::MatrixXd& c) { return 1.0 + (c.size() ? c.cwiseAbs().maxCoeff() : 0.0); }

void check_kind(const Eigen::MatrixXd& c, PathKind kind, double tol) {
  if (kind == PathKind::Free) return;
  const double scale = coeff_scale(c) * static_cast<double>(c.cols());
  if (c.col(0).cwiseAbs().maxCoeff() > tol * scale) throw InputError("based path must vanish at theta = 0");
  if (kind == PathKind::Loop && c.rowwise().sum().cwiseAbs().maxCoeff() > tol * scale)
    throw InputError("loop must vanish at theta = 2pi");
}

PathKind sum_kind(PathKind a, PathKind b) { return static_cast<PathKind>(std::min(static_cast<int>(a), static_cast<int>(b))); }

}  // namespace

PolyPath::PolyPath(AlgebraPtr algebra, Eigen::MatrixXd coeffs, PathKind kind)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)), kind_(kind) {
  if (!algebra_) throw InputError("PolyPath needs an algebra");
  if (coeffs_.rows() != algebra_->dim()) throw InputError("PolyPath coefficient rows must equal algebra dimension");
  if (coeffs_.cols() == 0) coeffs_ = Eigen::MatrixXd::Zero(algebra_->dim(), 1);
  check_kind(coeffs_, kind_, 1e-12);
}

PolyPath PolyPath::zero(AlgebraPtr algebra, PathKind kind) {
  const int n = algebra->dim();
  return PolyPath(std::move(algebra), Eigen::MatrixXd::Zero(n, 1), kind);
}

PolyPath PolyPath::monomial(AlgebraPtr algebra, int degree, const GVector& x) {
  if (degree < 0) throw InputError("negative monomial degree");
  if (x.size() != algebra->dim()) throw InputError("monomial direction has wrong dimension");
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(algebra->dim(), degree + 1);
  c.col(degree) = x;
  return PolyPath(std::move(algebra), std::move(c), degree == 0 ? PathKind::Free : PathKind::Based);
}

PolyPath PolyPath::times(AlgebraPtr algebra, const GVector& x, const ScalarPoly& f) {
  if (x.size() != algebra->dim()) throw InputError("direction has wrong dimension");
  Eigen::MatrixXd c = x * f.coeffs().transpose();
  PathKind kind = PathKind::Free;
  const double tol = 1e-12 * coeff_scale(f.coeffs()) * static_cast<double>(f.coeffs().size());
  if (std::abs(f(0.0)) <= tol) {
    c.col(0).setZero();
    kind = std::abs(f(1.0)) <= tol ? PathKind::Loop : PathKind::Based;
  }
  return PolyPath(std::move(algebra), std::move(c), kind);
}

PolyPath PolyPath::sample(AlgebraPtr algebra, PathKind kind, int degree, Rng& rng) {
  if (degree < 1) throw InputError("sampled paths need degree >= 1");
  const int n = algebra->dim();
  Eigen::MatrixXd c(n, degree + 1);
  for (int i = 0; i < n; ++i)
    for (int d = 0; d <= degree; ++d) c(i, d) = uniform(rng);
  if (kind != PathKind::Free) c.col(0).setZero();
  if (kind == PathKind::Loop) c.col(1) -= c.rowwise().sum().eval();
  return PolyPath(std::move(algebra), std::move(c), kind);
}

GVector PolyPath::at(double u) const {
  GVector acc = coeffs_.col(coeffs_.cols() - 1);
  for (Eigen::Index d = coeffs_.cols() - 2; d >= 0; --d) acc = (acc * u + coeffs_.col(d)).eval();
  return acc;
}

GVector PolyPath::endpoint() const { return coeffs_.rowwise().sum(); }

double PolyPath::norm() const {
  const Eigen::Index m = coeffs_.cols();
  double s = 0.0;
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) s += coeffs_.col(a).dot(coeffs_.col(b)) / static_cast<double>(a + b + 1);
  return std::sqrt(std::max(s, 0.0));
}

PolyPath PolyPath::as(PathKind kind, double tol) const {
  check_kind(coeffs_, kind, tol);
  PolyPath out = *this;
  out.kind_ = kind;
  if (kind != PathKind::Free) out.coeffs_.col(0).setZero();
  return out;
}

void PolyPath::combine(const PolyPath& other, double sign) {
  if (algebra_ != other.algebra_ && algebra_->name() != other.algebra_->name())
    throw InputError("paths over different algebras");
  if (other.coeffs_.cols() > coeffs_.cols()) {
    Eigen::MatrixXd grown = Eigen::MatrixXd::Zero(coeffs_.rows(), other.coeffs_.cols());
    grown.leftCols(coeffs_.cols()) = coeffs_;
    coeffs_ = std::move(grown);
  }
  coeffs_.leftCols(other.coeffs_.cols()) += sign * other.coeffs_;
  kind_ = sum_kind(kind_, other.kind_);
}

PolyPath& PolyPath::operator+=(const PolyPath& other) {
  combine(other, 1.0);
  return *this;
}

PolyPath& PolyPath::operator-=(const PolyPath& other) {
  combine(other, -1.0);
  return *this;
}

PolyPath& PolyPath::operator*=(double s) {
  coeffs_ *= s;
  return *this;
}

PolyPath derivative(const PolyPath& p) {
  const Eigen::Index m = p.coeffs().cols();
  if (m == 1) return PolyPath::zero(p.algebra(), PathKind::Free);
  Eigen::MatrixXd c(p.dim(), m - 1);
  for (Eigen::Index d = 1; d < m; ++d) c.col(d - 1) = p.coeffs().col(d) * (static_cast<double>(d) / kTwoPi);
  return PolyPath(p.algebra(), std::move(c), PathKind::Free);
}

void require_same_algebra(const PolyPath& p, const PolyPath& q) {
  if (p.algebra() != q.algebra() && p.algebra()->name() != q.algebra()->name())
    throw InputError("paths over different algebras");
}

PolyPath pointwise_bracket(const PolyPath& p, const PolyPath& q) {
  require_same_algebra(p, q);
  const LieAlgebra& g = *p.algebra();
  const int dp = p.degree(), dq = q.degree();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(g.dim(), dp + dq + 1);
  // pair (a,b) with (b,a) so that swapping p and q negates every partial sum exactly
  for (int s = 0; s <= dp + dq; ++s) {
    for (int a = 0; 2 * a <= s; ++a) {
      const int b = s - a;
      GVector val = GVector::Zero(g.dim());
      if (a <= dp && b <= dq) val = g.bracket(p.coeffs().col(a), q.coeffs().col(b));
      if (a != b && b <= dp && a <= dq) val = (val + g.bracket(p.coeffs().col(b), q.coeffs().col(a))).eval();
      out.col(s) += val;
    }
  }
  PathKind kind = PathKind::Free;
  if (p.is_loop() || q.is_loop())
    kind = PathKind::Loop;
  else if (p.is_based() || q.is_based())
    kind = PathKind::Based;
  if (kind != PathKind::Free) out.col(0).setZero();
  if (kind == PathKind::Loop) {
    // the endpoint value is a bracket against an exact zero; only roundoff can remain
    check_kind(out, PathKind::Loop, 1e-10);
  }
  return PolyPath(p.algebra(), std::move(out), kind);
}

double integral_pairing(const PolyPath& p, const PolyPath& q) {
  require_same_algebra(p, q);
  const Eigen::MatrixXd m = p.coeffs().transpose() * p.algebra()->form() * q.coeffs();
  double s = 0.0;
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index b = 0; b < m.cols(); ++b) s += m(a, b) / static_cast<double>(a + b + 1);
  return kTwoPi * s;
}

void require_loop(const PolyPath& p, const char* what) {
  if (!p.is_loop()) throw InputError(std::string(what) + " requires a loop");
}

void require_based(const PolyPath& p, const char* what) {
  if (!p.is_based()) throw InputError(std::string(what) + " requires a based path");
}

// ---------------------------------------------------------------------------
// CentralVector
// ---------------------------------------------------------------------------

CentralVector::CentralVector(PolyPath l, double central) : loop(std::move(l)), c(central) {
  require_loop(loop, "CentralVector");
}

CentralVector CentralVector::zero(AlgebraPtr algebra) {
  return CentralVector(PolyPath::zero(std::move(algebra), PathKind::Loop), 0.0);
}

CentralVector CentralVector::sample(AlgebraPtr algebra, int degree, Rng& rng) {
  PolyPath l = PolyPath::sample(std::move(algebra), PathKind::Loop, degree, rng);
  const double central = uniform(rng);
  return CentralVector(std::move(l), central);
}

double CentralVector::norm() const { return std::sqrt(loop.norm() * loop.norm() + c * c); }

CentralVector& CentralVector::operator+=(const CentralVector& o) {
  loop += o.loop;
  c += o.c;
  return *this;
}

CentralVector& CentralVector::operator-=(const CentralVector& o) {
  loop -= o.loop;
  c -= o.c;
  return *this;
}

CentralVector& CentralVector::operator*=(double s) {
  loop *= s;
  c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

nlohmann::ordered_json to_json(const GVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

nlohmann::ordered_json to_json(const PolyPath& p) {
  static constexpr const char* names[] = {"free", "based", "loop"};
  nlohmann::ordered_json j;
  j["kind"] = names[static_cast<int>(p.kind())];
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < p.dim(); ++i) rows.push_back(to_json(GVector(p.coeffs().row(i).transpose())));
  j["coeffs"] = std::move(rows);
  return j;
}

nlohmann::ordered_json to_json(const CentralVector& v) {
  nlohmann::ordered_json j;
  j["loop"] = to_json(v.loop);
  j["c"] = v.c;
  return j;
}

nlohmann::ordered_json to_json(const ScalarPoly& f) { return to_json(GVector(f.coeffs())); }

}  // namespace lie2
