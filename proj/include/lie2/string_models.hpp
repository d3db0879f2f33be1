#pragma once

#include <cstdint>

#include "lie2/algebra.hpp"
#include "lie2/linfty.hpp"
#include "lie2/poly_path.hpp"

namespace lie2 {

using GkAlgebra = TwoTermLInfinity<GVector, double>;
using PkgAlgebra = TwoTermLInfinity<PolyPath, CentralVector>;
using ELoops = TwoTermLInfinity<PolyPath, PolyPath>;
using EVectors = TwoTermLInfinity<GVector, GVector>;
using TrivialAlgebra = TwoTermLInfinity<Null, Null>;

using GkPtr = LInftyPtr<GVector, double>;
using PkgPtr = LInftyPtr<PolyPath, CentralVector>;
using ELoopsPtr = LInftyPtr<PolyPath, PolyPath>;
using EVectorsPtr = LInftyPtr<GVector, GVector>;
using TrivialPtr = LInftyPtr<Null, Null>;

using PhiHom = LInftyHom<PolyPath, CentralVector, GVector, double>;
using PsiHom = LInftyHom<GVector, double, PolyPath, CentralVector>;
using LambdaHom = LInftyHom<PolyPath, PolyPath, PolyPath, CentralVector>;
using PkgHomotopy = ChainHomotopy<PolyPath, CentralVector, PolyPath, CentralVector>;

/// g_k: V0 = g, V1 = R, d = 0, l2 = bracket, trivial action on R, l3 = k nu.
GkPtr make_gk(AlgebraPtr g, double k);

/// P_k g: V0 = based paths, V1 = loops + R, d(l,c) = l,
/// l2(p, (l,c)) = ([p,l], 2k int <p, l'>), l3 = 0. Sampled paths have the given degree.
PkgPtr make_pkg(AlgebraPtr g, double k, int sample_degree = 4);

/// E L for L = loops (of the given sample degree) or L = g itself: V0 = V1 = L,
/// d = identity, both brackets the bracket of L, l3 = 0.
ELoopsPtr make_el_loops(AlgebraPtr g, int sample_degree = 4);
EVectorsPtr make_el_vectors(AlgebraPtr g);

TrivialPtr make_trivial();

/// phi : P_k g -> g_k.  phi0 = endpoint, phi1(l,c) = c, phi2 = k int (<p1,p2'> - <p1',p2>).
PhiHom make_phi(PkgPtr pkg, GkPtr gk);

/// psi : g_k -> P_k g for a splitting function f.  psi0(x) = x f, psi1(c) = (0,c),
/// psi2(x1,x2) = ([x1,x2](f - f^2), 0). Throws InputError for an inadmissible f.
PsiHom make_psi(GkPtr gk, PkgPtr pkg, const ScalarPoly& f);

/// lambda : E(loops) -> P_k g.  lambda0 = inclusion, lambda1(l) = (l,0),
/// lambda2(l1,l2) = (0, -2k int <l1, l2'>).
LambdaHom make_lambda(ELoopsPtr el, PkgPtr pkg);

/// tau : psi.phi => id on P_k g, tau(p) = (p - p(2pi) f, 0).
PkgHomotopy make_tau(const PsiHom& psi, const PhiHom& phi);

/// Everything needed for the equivalence checks at one (g, k, f).
struct StringModel {
  AlgebraPtr g;
  double k = 0.0;
  ScalarPoly f;
  GkPtr gk;
  PkgPtr pkg;
  ELoopsPtr el;
  PhiHom phi;
  PsiHom psi;
  LambdaHom lambda;
  PkgHomotopy tau;
};

StringModel make_string_model(AlgebraPtr g, double k, const ScalarPoly& f, int sample_degree = 4);

/// phi with phi2 replaced by zero; a homomorphism only when k = 0.
PhiHom mutate_phi_zero_phi2(const PhiHom& phi);

/// Contraction of E L onto 0: beta : E L -> 0, gamma : 0 -> E L and
/// tau(x) = x : gamma.beta => id.
template <class V>
struct TrivialContraction {
  LInftyHom<V, V, Null, Null> beta;
  LInftyHom<Null, Null, V, V> gamma;
  ChainHomotopy<V, V, V, V> tau;
};

template <class V>
TrivialContraction<V> make_trivial_contraction(LInftyPtr<V, V> el) {
  TrivialPtr zero = make_trivial();
  TrivialContraction<V> out;
  out.beta.name = "beta";
  out.beta.src = el;
  out.beta.dst = zero;
  out.beta.phi0 = [](const V&) { return Null{}; };
  out.beta.phi1 = [](const V&) { return Null{}; };
  out.beta.phi2 = [](const V&, const V&) { return Null{}; };
  out.gamma.name = "gamma";
  out.gamma.src = zero;
  out.gamma.dst = el;
  out.gamma.phi0 = [el](const Null&) { return el->space0.zero(); };
  out.gamma.phi1 = [el](const Null&) { return el->space1.zero(); };
  out.gamma.phi2 = [el](const Null&, const Null&) { return el->space1.zero(); };
  out.tau.name = "tau_trivial";
  out.tau.from = compose(out.gamma, out.beta);
  out.tau.to = identity_hom(el);
  out.tau.tau = [](const V& x) { return x; };
  return out;
}

/// Recomputes lambda2 on pairs of basis loops from the bracket1 law with h = d^{-1} y and the
/// chain-map parts alone, and returns the largest deviation from make_lambda's lambda2.
double lambda2_uniqueness_residual(const StringModel& m, int degree);

/// Exact rank verification of im(lambda) = ker(phi) on paths of degree <= D.
struct ExactnessReport {
  int n = 0;
  int degree = 0;
  // objects: based paths (dim nD) and loops (dim n(D-1))
  int dim_paths = 0;
  int dim_loops = 0;
  int rank_phi0 = 0;
  int rank_lambda0 = 0;
  bool phi0_lambda0_zero = false;
  // morphisms: loops + R (dim n(D-1)+1)
  int dim_morphisms = 0;
  int rank_phi1 = 0;
  int rank_lambda1 = 0;
  bool phi1_lambda1_zero = false;

  int dim_ker_phi0() const { return dim_paths - rank_phi0; }
  int dim_ker_phi1() const { return dim_morphisms - rank_phi1; }
  bool pass() const;
};

/// Throws InputError when D < 2.
ExactnessReport exactness_check(const StringModel& m, int degree);

/// Rank of an integer matrix by fraction-free Gaussian elimination.
int exact_rank(std::vector<std::vector<std::int64_t>> rows);

}  // namespace lie2
