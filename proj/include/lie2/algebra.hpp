#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "lie2/rng.hpp"

namespace lie2 {

using GVector = Eigen::VectorXd;

/// Largest violation of each presentation invariant; all zero for a valid table.
struct AlgebraValidation {
  double antisymmetry = 0.0;
  double jacobi = 0.0;
  double form_symmetry = 0.0;
  double invariance = 0.0;

  bool ok(double tol = 1e-12) const {
    return antisymmetry <= tol && jacobi <= tol && form_symmetry <= tol && invariance <= tol;
  }
};

/// Finite-dimensional real Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k together with an invariant symmetric form B.
class LieAlgebra {
 public:
  /// Builds without validating; use validate() or the checked factories.
  LieAlgebra(std::string name, int dim, std::vector<double> structure, Eigen::MatrixXd form);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  double c(int i, int j, int k) const { return structure_[(i * dim_ + j) * dim_ + k]; }
  const Eigen::MatrixXd& form() const { return form_; }

  /// Sum_ij x_i y_j c(i,j,.), evaluated over i<j so that [x,y] = -[y,x] bit for bit.
  GVector bracket(const GVector& x, const GVector& y) const;
  double pairing(const GVector& x, const GVector& y) const;

  /// nu(x,y,z) = B(x, [y,z]).
  double nu(const GVector& x, const GVector& y, const GVector& z) const;

  AlgebraValidation validate() const;

  /// Same bracket, form replaced; no validation (used for mutation controls).
  LieAlgebra with_form(Eigen::MatrixXd form) const;
  LieAlgebra scaled(double form_scale) const;

  GVector basis(int i) const;
  GVector zero() const { return GVector::Zero(dim_); }
  GVector sample(Rng& rng) const;

 private:
  void require_dim(const GVector& v) const;

  std::string name_;
  int dim_;
  std::vector<double> structure_;
  Eigen::MatrixXd form_;
  // (i<j) pairs with a nonzero bracket, cached for the antisymmetric evaluation
  struct Entry {
    int i, j;
    std::vector<std::pair<int, double>> coeffs;
  };
  std::vector<Entry> entries_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Chevalley-Eilenberg differential of nu with trivial coefficients:
///   (d nu)(v1,..,v4) = sum_{i<j} (-1)^{i+j} nu([v_i,v_j], v_rest...)
/// (1-based positions, remaining arguments in increasing order).
double ce_three_cocycle(const LieAlgebra& g, const GVector& w, const GVector& x, const GVector& y,
                        const GVector& z);
/// |d nu|; vanishes when B is invariant.
double ce_three_cocycle_residual(const LieAlgebra& g, const GVector& w, const GVector& x,
                                 const GVector& y, const GVector& z);

/// su(2) in the basis with c(1,2,3) = c(2,3,1) = c(3,1,2) = 1 and B = I.
AlgebraPtr make_su2(double form_scale = 1.0);
/// so(3) with the cross-product table and B = I.
AlgebraPtr make_so3(double form_scale = 1.0);
/// so(n) on the basis E_ab = e_a e_b^T - e_b e_a^T (a<b), B(X,Y) = -tr(XY)/2.
AlgebraPtr make_so(int n, double form_scale = 1.0);

/// Bundled name (su2, so3, so4, ...) or path to a structure-constants JSON file.
/// Throws InputError for unknown names, unreadable files and invalid tables.
AlgebraPtr load_algebra(const std::string& name_or_path, double form_scale = 1.0);
AlgebraPtr load_algebra_json(const std::filesystem::path& path, double form_scale = 1.0);
AlgebraPtr parse_algebra_json(const std::string& text, double form_scale = 1.0);

}  // namespace lie2
