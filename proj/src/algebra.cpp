#include "lie2/algebra.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "lie2/error.hpp"

namespace lie2 {

LieAlgebra::LieAlgebra(std::string name, int dim, std::vector<double> structure,
                       Eigen::MatrixXd form)
    : name_(std::move(name)), dim_(dim), structure_(std::move(structure)), form_(std::move(form)) {
  if (dim_ <= 0) throw InputError("Lie algebra dimension must be positive");
  if (structure_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
    throw InputError("structure constant table has wrong size");
  if (form_.rows() != dim_ || form_.cols() != dim_)
    throw InputError("invariant form has wrong shape");
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      Entry e{i, j, {}};
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0.0) e.coeffs.emplace_back(k, c(i, j, k));
      if (!e.coeffs.empty()) entries_.push_back(std::move(e));
    }
  }
}

void LieAlgebra::require_dim(const GVector& v) const {
  if (v.size() != dim_)
    throw InputError("vector of length " + std::to_string(v.size()) + " in algebra " + name_ +
                     " of dimension " + std::to_string(dim_));
}

GVector LieAlgebra::bracket(const GVector& x, const GVector& y) const {
  require_dim(x);
  require_dim(y);
  GVector out = GVector::Zero(dim_);
  for (const auto& e : entries_) {
    const double w = x[e.i] * y[e.j] - x[e.j] * y[e.i];
    if (w == 0.0) continue;
    for (const auto& [k, ck] : e.coeffs) out[k] += w * ck;
  }
  return out;
}

double LieAlgebra::pairing(const GVector& x, const GVector& y) const {
  require_dim(x);
  require_dim(y);
  return x.dot(form_ * y);
}

double LieAlgebra::nu(const GVector& x, const GVector& y, const GVector& z) const {
  return pairing(x, bracket(y, z));
}

AlgebraValidation LieAlgebra::validate() const {
  AlgebraValidation v;
  const int n = dim_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) v.antisymmetry = std::max(v.antisymmetry, std::abs(c(i, j, k) + c(j, i, k)));

  // sum_m c(i,j,m) c(m,l,k) + c(j,l,m) c(m,i,k) + c(l,i,m) c(m,j,k)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
          double s = 0.0;
          for (int m = 0; m < n; ++m)
            s += c(i, j, m) * c(m, l, k) + c(j, l, m) * c(m, i, k) + c(l, i, m) * c(m, j, k);
          v.jacobi = std::max(v.jacobi, std::abs(s));
        }

  v.form_symmetry = (form_ - form_.transpose()).cwiseAbs().maxCoeff();

  // B([e_i,e_j], e_l) + B(e_j, [e_i,e_l])
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        double s = 0.0;
        for (int m = 0; m < n; ++m) s += c(i, j, m) * form_(m, l) + c(i, l, m) * form_(j, m);
        v.invariance = std::max(v.invariance, std::abs(s));
      }
  return v;
}

LieAlgebra LieAlgebra::with_form(Eigen::MatrixXd form) const {
  return LieAlgebra(name_, dim_, structure_, std::move(form));
}

LieAlgebra LieAlgebra::scaled(double form_scale) const { return with_form(form_ * form_scale); }

GVector LieAlgebra::basis(int i) const {
  if (i < 0 || i >= dim_) throw InputError("basis index out of range");
  return GVector::Unit(dim_, i);
}

GVector LieAlgebra::sample(Rng& rng) const {
  GVector v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = uniform(rng);
  return v;
}

double ce_three_cocycle(const LieAlgebra& g, const GVector& w, const GVector& x, const GVector& y,
                        const GVector& z) {
  const GVector* v[4] = {&w, &x, &y, &z};
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const GVector* rest[2];
      int r = 0;
      for (int m = 0; m < 4; ++m)
        if (m != i && m != j) rest[r++] = v[m];
      // positions are 1-based in the sign
      const double sign = ((i + j + 2) % 2 == 0) ? 1.0 : -1.0;
      total += sign * g.nu(g.bracket(*v[i], *v[j]), *rest[0], *rest[1]);
    }
  }
  return total;
}

double ce_three_cocycle_residual(const LieAlgebra& g, const GVector& w, const GVector& x,
                                 const GVector& y, const GVector& z) {
  return std::abs(ce_three_cocycle(g, w, x, y, z));
}

namespace {

AlgebraPtr checked(LieAlgebra alg) {
  const auto v = alg.validate();
  if (!v.ok()) {
    std::ostringstream os;
    os << "presentation '" << alg.name() << "' is invalid: antisymmetry " << v.antisymmetry
       << ", jacobi " << v.jacobi << ", form symmetry " << v.form_symmetry << ", invariance "
       << v.invariance;
    throw AlgebraLoadError(os.str());
  }
  return std::make_shared<const LieAlgebra>(std::move(alg));
}

LieAlgebra cyclic_three(std::string name, double form_scale) {
  std::vector<double> c(27, 0.0);
  auto set = [&](int i, int j, int k, double v) {
    c[(i * 3 + j) * 3 + k] = v;
    c[(j * 3 + i) * 3 + k] = -v;
  };
  set(0, 1, 2, 1.0);
  set(1, 2, 0, 1.0);
  set(2, 0, 1, 1.0);
  return LieAlgebra(std::move(name), 3, std::move(c), Eigen::MatrixXd::Identity(3, 3) * form_scale);
}

}  // namespace

AlgebraPtr make_su2(double form_scale) { return checked(cyclic_three("su2", form_scale)); }

AlgebraPtr make_so3(double form_scale) { return checked(cyclic_three("so3", form_scale)); }

AlgebraPtr make_so(int n, double form_scale) {
  if (n < 2) throw AlgebraLoadError("so(n) needs n >= 2");
  std::vector<std::pair<int, int>> labels;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) labels.emplace_back(a, b);
  const int dim = static_cast<int>(labels.size());
  auto generator = [&](int idx) {
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    e(labels[idx].first, labels[idx].second) = 1.0;
    e(labels[idx].second, labels[idx].first) = -1.0;
    return e;
  };
  std::vector<double> c(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Eigen::MatrixXd comm = generator(i) * generator(j) - generator(j) * generator(i);
      for (int k = 0; k < dim; ++k) c[(i * dim + j) * dim + k] = comm(labels[k].first, labels[k].second);
    }
  return checked(LieAlgebra("so" + std::to_string(n), dim, std::move(c),
                            Eigen::MatrixXd::Identity(dim, dim) * form_scale));
}

AlgebraPtr parse_algebra_json(const std::string& text, double form_scale) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraLoadError(std::string("malformed algebra JSON: ") + e.what());
  }
  try {
    const std::string name = doc.value("name", std::string("custom"));
    const int n = doc.at("dim").get<int>();
    if (n <= 0) throw AlgebraLoadError("dim must be positive");
    std::vector<double> c(static_cast<std::size_t>(n) * n * n, 0.0);
    std::vector<char> seen(c.size(), 0);
    for (const auto& entry : doc.at("structure")) {
      if (!entry.is_array() || entry.size() != 4)
        throw AlgebraLoadError("structure entries must be [i, j, k, value]");
      const int i = entry[0].get<int>() - 1, j = entry[1].get<int>() - 1, k = entry[2].get<int>() - 1;
      const double v = entry[3].get<double>();
      if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw AlgebraLoadError("structure index out of range (indices are 1-based)");
      if (i == j) {
        if (v != 0.0) throw AlgebraLoadError("[e_i, e_i] must vanish");
        continue;
      }
      const std::size_t ij = (static_cast<std::size_t>(i) * n + j) * n + k;
      const std::size_t ji = (static_cast<std::size_t>(j) * n + i) * n + k;
      if ((seen[ij] && c[ij] != v) || (seen[ji] && c[ji] != -v))
        throw AlgebraLoadError("inconsistent structure constants for pair (" + std::to_string(i + 1) +
                               "," + std::to_string(j + 1) + ")");
      c[ij] = v;
      c[ji] = -v;
      seen[ij] = seen[ji] = 1;
    }
    Eigen::MatrixXd form = Eigen::MatrixXd::Identity(n, n);
    if (doc.contains("form")) {
      const auto& rows = doc.at("form");
      if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw AlgebraLoadError("form must be an n x n array");
      for (int r = 0; r < n; ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n)
          throw AlgebraLoadError("form must be an n x n array");
        for (int s = 0; s < n; ++s) form(r, s) = rows[r][s].get<double>();
      }
      form = 0.5 * (form + form.transpose()).eval();
    }
    return checked(LieAlgebra(name, n, std::move(c), form * form_scale));
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraLoadError(std::string("algebra JSON: ") + e.what());
  }
}

AlgebraPtr load_algebra_json(const std::filesystem::path& path, double form_scale) {
  std::ifstream in(path);
  if (!in) throw AlgebraLoadError("cannot read algebra file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str(), form_scale);
}

AlgebraPtr load_algebra(const std::string& name_or_path, double form_scale) {
  if (name_or_path == "su2") return make_su2(form_scale);
  if (name_or_path == "so3") return make_so3(form_scale);
  if (name_or_path.size() > 2 && name_or_path.rfind("so", 0) == 0 &&
      name_or_path.find_first_not_of("0123456789", 2) == std::string::npos)
    return make_so(std::stoi(name_or_path.substr(2)), form_scale);
  return load_algebra_json(name_or_path, form_scale);
}

}  // namespace lie2
