#include "lie2/kac_moody.hpp"

#include <cmath>

#include "lie2/linfty.hpp"

namespace lie2 {

double omega(const PolyPath& f, const PolyPath& g, double k) {
  require_loop(f, "omega");
  require_loop(g, "omega");
  return 2.0 * k * integral_pairing(f, derivative(g));
}

double omega_cocycle_residual(const PolyPath& f, const PolyPath& g, const PolyPath& h, double k) {
  const double s = omega(pointwise_bracket(f, g), h, k) + omega(pointwise_bracket(g, h), f, k) +
                   omega(pointwise_bracket(h, f), g, k);
  return std::abs(s) / relative_scale({f.norm(), g.norm(), h.norm()});
}

CentralVector extended_bracket(const CentralVector& a, const CentralVector& b, double k) {
  return CentralVector(pointwise_bracket(a.loop, b.loop), omega(a.loop, b.loop, k));
}

double extended_jacobi_residual(const CentralVector& a, const CentralVector& b, const CentralVector& c, double k) {
  CentralVector s = extended_bracket(extended_bracket(a, b, k), c, k);
  s += extended_bracket(extended_bracket(b, c, k), a, k);
  s += extended_bracket(extended_bracket(c, a, k), b, k);
  return s.norm() / relative_scale({a.norm(), b.norm(), c.norm()});
}

CentralVector dalpha(const PolyPath& p, const CentralVector& v, double k) {
  require_based(p, "dalpha");
  return CentralVector(pointwise_bracket(p, v.loop), 2.0 * k * integral_pairing(p, derivative(v.loop)));
}

double dalpha_action_residual(const PolyPath& p1, const PolyPath& p2, const CentralVector& v, double k) {
  CentralVector r = dalpha(pointwise_bracket(p1, p2), v, k);
  r -= dalpha(p1, dalpha(p2, v, k), k);
  r += dalpha(p2, dalpha(p1, v, k), k);
  return r.norm() / relative_scale({p1.norm(), p2.norm(), v.norm()});
}

double dalpha_derivation_residual(const PolyPath& p, const CentralVector& a, const CentralVector& b, double k) {
  CentralVector r = dalpha(p, extended_bracket(a, b, k), k);
  r -= extended_bracket(dalpha(p, a, k), b, k);
  r -= extended_bracket(a, dalpha(p, b, k), k);
  return r.norm() / relative_scale({p.norm(), a.norm(), b.norm()});
}

double dalpha_equivariance_residual(const PolyPath& p, const CentralVector& v, double k) {
  const PolyPath r = dalpha(p, v, k).loop - pointwise_bracket(p, v.loop);
  return r.norm() / relative_scale({p.norm(), v.norm()});
}

double dalpha_inner_residual(const PolyPath& loop, const CentralVector& v, double k) {
  require_loop(loop, "dalpha_inner_residual");
  CentralVector r = dalpha(loop, v, k);
  r -= extended_bracket(CentralVector(loop, 0.0), v, k);
  return r.norm() / relative_scale({loop.norm(), v.norm()});
}

}  // namespace lie2
