#include "lie2/string_models.hpp"

#include <cmath>
#include <string>

#include "lie2/error.hpp"
#include "lie2/kac_moody.hpp"

namespace lie2 {

namespace {

Space<GVector> vector_space(const AlgebraPtr& g, std::string name) {
  Space<GVector> s;
  s.name = std::move(name);
  s.zero = [g] { return g->zero(); };
  s.sample = [g](Rng& rng) { return g->sample(rng); };
  s.norm = [](const GVector& x) { return x.norm(); };
  s.basis = [g] {
    std::vector<GVector> b;
    for (int i = 0; i < g->dim(); ++i) b.push_back(g->basis(i));
    return b;
  };
  return s;
}

Space<double> real_line() {
  Space<double> s;
  s.name = "R";
  s.zero = [] { return 0.0; };
  s.sample = [](Rng& rng) { return uniform(rng); };
  s.norm = [](const double& c) { return std::abs(c); };
  s.basis = [] { return std::vector<double>{1.0}; };
  return s;
}

Space<PolyPath> path_space(const AlgebraPtr& g, PathKind kind, int degree, std::string name) {
  Space<PolyPath> s;
  s.name = std::move(name);
  s.zero = [g, kind] { return PolyPath::zero(g, kind); };
  s.sample = [g, kind, degree](Rng& rng) { return PolyPath::sample(g, kind, degree, rng); };
  s.norm = [](const PolyPath& p) { return p.norm(); };
  return s;
}

void require_degree(int degree) {
  if (degree < 2) throw InputError("sample degree must be at least 2 so that nonzero loops exist");
}

std::int64_t to_integer(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9) throw AxiomError("non-integral coordinate " + std::to_string(v) + " in exactness matrix");
  return static_cast<std::int64_t>(r);
}

}  // namespace

GkPtr make_gk(AlgebraPtr g, double k) {
  auto L = std::make_shared<GkAlgebra>();
  L->name = "g_k(" + g->name() + ")";
  L->space0 = vector_space(g, g->name());
  L->space1 = real_line();
  L->d = [g](const double&) { return g->zero(); };
  L->l2_00 = [g](const GVector& x, const GVector& y) { return g->bracket(x, y); };
  L->l2_01 = [](const GVector&, const double&) { return 0.0; };
  L->l3 = [g, k](const GVector& x, const GVector& y, const GVector& z) { return k * g->nu(x, y, z); };
  L->level = k;
  return L;
}

PkgPtr make_pkg(AlgebraPtr g, double k, int sample_degree) {
  require_degree(sample_degree);
  auto L = std::make_shared<PkgAlgebra>();
  L->name = "P_k(" + g->name() + ")";
  L->space0 = path_space(g, PathKind::Based, sample_degree, "based paths");
  L->space1.name = "loops + R";
  L->space1.zero = [g] { return CentralVector::zero(g); };
  L->space1.sample = [g, sample_degree](Rng& rng) { return CentralVector::sample(g, sample_degree, rng); };
  L->space1.norm = [](const CentralVector& v) { return v.norm(); };
  L->d = [](const CentralVector& v) { return v.loop; };
  L->l2_00 = [](const PolyPath& p, const PolyPath& q) { return pointwise_bracket(p, q); };
  L->l2_01 = [k](const PolyPath& p, const CentralVector& v) { return dalpha(p, v, k); };
  L->l3 = [g](const PolyPath&, const PolyPath&, const PolyPath&) { return CentralVector::zero(g); };
  L->level = k;
  return L;
}

ELoopsPtr make_el_loops(AlgebraPtr g, int sample_degree) {
  require_degree(sample_degree);
  auto L = std::make_shared<ELoops>();
  L->name = "E(loops " + g->name() + ")";
  L->space0 = path_space(g, PathKind::Loop, sample_degree, "loops");
  L->space1 = L->space0;
  L->d = [](const PolyPath& h) { return h; };
  L->l2_00 = [](const PolyPath& p, const PolyPath& q) { return pointwise_bracket(p, q); };
  L->l2_01 = L->l2_00;
  L->l3 = [g](const PolyPath&, const PolyPath&, const PolyPath&) { return PolyPath::zero(g, PathKind::Loop); };
  return L;
}

EVectorsPtr make_el_vectors(AlgebraPtr g) {
  auto L = std::make_shared<EVectors>();
  L->name = "E(" + g->name() + ")";
  L->space0 = vector_space(g, g->name());
  L->space1 = L->space0;
  L->d = [](const GVector& h) { return h; };
  L->l2_00 = [g](const GVector& x, const GVector& y) { return g->bracket(x, y); };
  L->l2_01 = L->l2_00;
  L->l3 = [g](const GVector&, const GVector&, const GVector&) { return g->zero(); };
  return L;
}

TrivialPtr make_trivial() {
  auto L = std::make_shared<TrivialAlgebra>();
  L->name = "0";
  Space<Null> s;
  s.name = "0";
  s.zero = [] { return Null{}; };
  s.sample = [](Rng&) { return Null{}; };
  s.norm = [](const Null&) { return 0.0; };
  s.basis = [] { return std::vector<Null>{}; };
  L->space0 = s;
  L->space1 = s;
  L->d = [](const Null&) { return Null{}; };
  L->l2_00 = [](const Null&, const Null&) { return Null{}; };
  L->l2_01 = L->l2_00;
  L->l3 = [](const Null&, const Null&, const Null&) { return Null{}; };
  return L;
}

PhiHom make_phi(PkgPtr pkg, GkPtr gk) {
  const double k = gk->level;
  PhiHom phi;
  phi.name = "phi";
  phi.src = pkg;
  phi.dst = gk;
  phi.phi0 = [](const PolyPath& p) { return p.endpoint(); };
  phi.phi1 = [](const CentralVector& v) { return v.c; };
  phi.phi2 = [k](const PolyPath& p1, const PolyPath& p2) {
    return k * (integral_pairing(p1, derivative(p2)) - integral_pairing(derivative(p1), p2));
  };
  return phi;
}

PsiHom make_psi(GkPtr gk, PkgPtr pkg, const ScalarPoly& f) {
  require_splitting(f);
  const AlgebraPtr g = pkg->space0.zero().algebra();
  const ScalarPoly bump = f - f * f;
  PsiHom psi;
  psi.name = "psi";
  psi.src = gk;
  psi.dst = pkg;
  psi.phi0 = [g, f](const GVector& x) { return PolyPath::times(g, x, f); };
  psi.phi1 = [g](const double& c) { return CentralVector(PolyPath::zero(g, PathKind::Loop), c); };
  psi.phi2 = [g, bump](const GVector& x1, const GVector& x2) {
    return CentralVector(PolyPath::times(g, g->bracket(x1, x2), bump).as(PathKind::Loop), 0.0);
  };
  return psi;
}

LambdaHom make_lambda(ELoopsPtr el, PkgPtr pkg) {
  const double k = pkg->level;
  const AlgebraPtr g = pkg->space0.zero().algebra();
  LambdaHom lambda;
  lambda.name = "lambda";
  lambda.src = el;
  lambda.dst = pkg;
  lambda.phi0 = [](const PolyPath& l) { return l; };
  lambda.phi1 = [](const PolyPath& l) { return CentralVector(l, 0.0); };
  lambda.phi2 = [g, k](const PolyPath& l1, const PolyPath& l2) {
    return CentralVector(PolyPath::zero(g, PathKind::Loop), -2.0 * k * integral_pairing(l1, derivative(l2)));
  };
  return lambda;
}

PkgHomotopy make_tau(const PsiHom& psi, const PhiHom& phi) {
  PkgHomotopy tau;
  tau.name = "tau";
  tau.from = compose(psi, phi);
  tau.to = identity_hom(psi.dst);
  // psi0(p(2pi)) = p(2pi) f, so tau(p) = p - psi0(phi0(p))
  tau.tau = [psi, phi](const PolyPath& p) {
    return CentralVector((p - psi.phi0(phi.phi0(p))).as(PathKind::Loop), 0.0);
  };
  return tau;
}

StringModel make_string_model(AlgebraPtr g, double k, const ScalarPoly& f, int sample_degree) {
  StringModel m;
  m.g = g;
  m.k = k;
  m.f = f;
  m.gk = make_gk(g, k);
  m.pkg = make_pkg(g, k, sample_degree);
  m.el = make_el_loops(g, sample_degree);
  m.phi = make_phi(m.pkg, m.gk);
  m.psi = make_psi(m.gk, m.pkg, f);
  m.lambda = make_lambda(m.el, m.pkg);
  m.tau = make_tau(m.psi, m.phi);
  return m;
}

PhiHom mutate_phi_zero_phi2(const PhiHom& phi) {
  PhiHom out = phi;
  out.name = "phi[phi2=0]";
  out.phi2 = [](const PolyPath&, const PolyPath&) { return 0.0; };
  return out;
}

namespace {

std::vector<PolyPath> loop_basis(const AlgebraPtr& g, int degree) {
  std::vector<PolyPath> out;
  for (int d = 2; d <= degree; ++d)
    for (int i = 0; i < g->dim(); ++i)
      out.push_back((PolyPath::monomial(g, d, g->basis(i)) - PolyPath::monomial(g, 1, g->basis(i))).as(PathKind::Loop));
  return out;
}

std::vector<PolyPath> based_basis(const AlgebraPtr& g, int degree) {
  std::vector<PolyPath> out;
  for (int d = 1; d <= degree; ++d)
    for (int i = 0; i < g->dim(); ++i) out.push_back(PolyPath::monomial(g, d, g->basis(i)));
  return out;
}

// coordinates of a based path in based_basis(degree)
std::vector<std::int64_t> based_coords(const PolyPath& p, int degree) {
  if (p.degree() > degree) throw AxiomError("path leaves the ambient degree bound");
  const int n = p.dim();
  std::vector<std::int64_t> c(static_cast<std::size_t>(n * degree), 0);
  if (to_integer(p.coeffs().col(0).cwiseAbs().maxCoeff()) != 0) throw AxiomError("path is not based");
  for (int d = 1; d <= p.degree(); ++d)
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>((d - 1) * n + i)] = to_integer(p.coeffs()(i, d));
  return c;
}

// coordinates of a loop in loop_basis(degree): l = sum_{d>=2} c_d (u^d - u)
std::vector<std::int64_t> loop_coords(const PolyPath& l, int degree) {
  const std::vector<std::int64_t> b = based_coords(l, degree);
  const int n = l.dim();
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int d = 1; d <= degree; ++d) s += b[static_cast<std::size_t>((d - 1) * n + i)];
    if (s != 0) throw AxiomError("element is not a loop");
  }
  return {b.begin() + n, b.end()};
}

// columns in, rows out
std::vector<std::vector<std::int64_t>> transpose(const std::vector<std::vector<std::int64_t>>& cols) {
  if (cols.empty()) return {};
  std::vector<std::vector<std::int64_t>> rows(cols[0].size(), std::vector<std::int64_t>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) rows[i][j] = cols[j][i];
  return rows;
}

}  // namespace

double lambda2_uniqueness_residual(const StringModel& m, int degree) {
  const auto basis = loop_basis(m.g, degree);
  const auto& P = *m.pkg;
  double worst = 0.0;
  for (const PolyPath& x : basis)
    for (const PolyPath& y : basis) {
      // d = id on E(loops), so the bracket1 law with h = y fixes lambda2(x, y) = lambda1([x,y]) - l2(lambda0 x, lambda1 y)
      const CentralVector solved = m.lambda.phi1(pointwise_bracket(x, y)) - P.l2_01(m.lambda.phi0(x), m.lambda.phi1(y));
      const double r = (solved - m.lambda.phi2(x, y)).norm() / relative_scale({x.norm(), y.norm()});
      worst = std::max(worst, r);
    }
  return worst;
}

bool ExactnessReport::pass() const {
  return rank_phi0 == n && rank_lambda0 == dim_loops && phi0_lambda0_zero && rank_lambda0 == dim_ker_phi0() &&
         rank_phi1 == 1 && rank_lambda1 == dim_loops && phi1_lambda1_zero && rank_lambda1 == dim_ker_phi1();
}

ExactnessReport exactness_check(const StringModel& m, int degree) {
  if (degree < 2) throw InputError("exactness check needs ambient degree D >= 2, got " + std::to_string(degree));
  const int n = m.g->dim();
  ExactnessReport r;
  r.n = n;
  r.degree = degree;
  r.dim_paths = n * degree;
  r.dim_loops = n * (degree - 1);
  r.dim_morphisms = r.dim_loops + 1;

  const auto paths = based_basis(m.g, degree);
  const auto loops = loop_basis(m.g, degree);

  std::vector<std::vector<std::int64_t>> phi0_cols, lambda0_cols, phi1_cols, lambda1_cols;
  for (const PolyPath& p : paths) {
    std::vector<std::int64_t> col;
    const GVector v = m.phi.phi0(p);
    for (int i = 0; i < n; ++i) col.push_back(to_integer(v[i]));
    phi0_cols.push_back(std::move(col));
  }
  r.phi0_lambda0_zero = true;
  r.phi1_lambda1_zero = true;
  for (const PolyPath& l : loops) {
    const PolyPath image0 = m.lambda.phi0(l);
    lambda0_cols.push_back(based_coords(image0, degree));
    if (m.phi.phi0(image0).cwiseAbs().maxCoeff() != 0.0) r.phi0_lambda0_zero = false;

    const CentralVector image1 = m.lambda.phi1(l);
    std::vector<std::int64_t> col = loop_coords(image1.loop, degree);
    col.push_back(to_integer(image1.c));
    lambda1_cols.push_back(std::move(col));
    if (m.phi.phi1(image1) != 0.0) r.phi1_lambda1_zero = false;
  }
  for (const PolyPath& l : loops) phi1_cols.push_back({to_integer(m.phi.phi1(CentralVector(l, 0.0)))});
  phi1_cols.push_back({to_integer(m.phi.phi1(CentralVector(PolyPath::zero(m.g, PathKind::Loop), 1.0)))});

  r.rank_phi0 = exact_rank(transpose(phi0_cols));
  r.rank_lambda0 = exact_rank(transpose(lambda0_cols));
  r.rank_phi1 = exact_rank(transpose(phi1_cols));
  r.rank_lambda1 = exact_rank(transpose(lambda1_cols));
  return r;
}

int exact_rank(std::vector<std::vector<std::int64_t>> rows) {
  using Wide = __int128;
  const std::size_t m = rows.size();
  if (m == 0) return 0;
  const std::size_t ncols = rows[0].size();
  std::vector<std::vector<Wide>> a(m, std::vector<Wide>(ncols));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != ncols) throw InputError("ragged matrix");
    for (std::size_t j = 0; j < ncols; ++j) a[i][j] = rows[i][j];
  }
  // Bareiss: every division below is exact
  Wide prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace lie2
