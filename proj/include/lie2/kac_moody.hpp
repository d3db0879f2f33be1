#pragma once

#include "lie2/poly_path.hpp"

namespace lie2 {

/// omega_k(f, g) = 2k int <f, g'> dtheta on loops.
double omega(const PolyPath& f, const PolyPath& g, double k);

/// |omega([f,g],h) + omega([g,h],f) + omega([h,f],g)| relative to the input norms.
double omega_cocycle_residual(const PolyPath& f, const PolyPath& g, const PolyPath& h, double k);

/// [(f,a),(g,b)] = ([f,g], omega_k(f,g)) on the direct sum of loops and R.
CentralVector extended_bracket(const CentralVector& a, const CentralVector& b, double k);

/// Relative norm of the cyclic Jacobi sum of the extended bracket.
double extended_jacobi_residual(const CentralVector& a, const CentralVector& b, const CentralVector& c, double k);

/// Infinitesimal action of a based path on the central extension:
/// dalpha(p)(l, c) = ([p,l], 2k int <p, l'> dtheta).
CentralVector dalpha(const PolyPath& p, const CentralVector& v, double k);

/// dalpha([p1,p2]) v - [dalpha(p1), dalpha(p2)] v, relative.
double dalpha_action_residual(const PolyPath& p1, const PolyPath& p2, const CentralVector& v, double k);

/// dalpha(p)[a,b] - [dalpha(p)a, b] - [a, dalpha(p)b], relative.
double dalpha_derivation_residual(const PolyPath& p, const CentralVector& a, const CentralVector& b, double k);

/// Projection to loops intertwines the action with ad: d(dalpha(p)v) - [p, d v], relative.
double dalpha_equivariance_residual(const PolyPath& p, const CentralVector& v, double k);

/// For a loop p, dalpha(p)v agrees with the extended bracket [(p,0), v]; relative.
double dalpha_inner_residual(const PolyPath& loop, const CentralVector& v, double k);

}  // namespace lie2
