#pragma once

// 2-term L-infinity algebras, their homomorphisms and 2-homomorphisms.
//
// A 2-term L-infinity algebra is a complex V1 --d--> V0 with brackets
//   l2 : V0 x V0 -> V0,   l2 : V0 x V1 -> V1,   l3 : V0 x V0 x V0 -> V1.
// Every other l_k is forced to vanish by the grading: l1 on V0 lands in V_{-1} = 0,
// l2 on V1 x V1 lands in V2 = 0, l3 with a degree-1 argument lands in degree >= 2,
// and l_k = 0 for k >= 4. The generalized Jacobi identity is evaluated from the
// unshuffle sum directly; the degree bookkeeping lives in apply_bracket().

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lie2/error.hpp"
#include "lie2/graded.hpp"
#include "lie2/rng.hpp"

namespace lie2 {

/// The zero vector space, used for the trivial Lie 2-algebra.
struct Null {
  friend Null operator+(Null, Null) { return {}; }
  friend Null operator-(Null, Null) { return {}; }
  friend Null operator*(double, Null) { return {}; }
  bool operator==(const Null&) const = default;
};

template <class V>
struct Space {
  std::string name;
  std::function<V()> zero;
  std::function<V(Rng&)> sample;
  std::function<double(const V&)> norm;
  /// Coordinate basis for finite-dimensional spaces; empty function otherwise.
  std::function<std::vector<V>()> basis;
};

template <class V0, class V1>
struct TwoTermLInfinity {
  std::string name;
  Space<V0> space0;
  Space<V1> space1;
  std::function<V0(const V1&)> d;
  std::function<V0(const V0&, const V0&)> l2_00;
  std::function<V1(const V0&, const V1&)> l2_01;
  std::function<V1(const V0&, const V0&, const V0&)> l3;
  double level = 0.0;
};

template <class V0, class V1>
using LInftyPtr = std::shared_ptr<const TwoTermLInfinity<V0, V1>>;

/// Homogeneous element of V0 (degree 0) or V1 (degree 1). V0 and V1 may coincide,
/// so the degree is the variant index rather than the held type.
template <class V0, class V1>
class Graded {
 public:
  static Graded deg0(V0 x) { return Graded(std::variant<V0, V1>(std::in_place_index<0>, std::move(x))); }
  static Graded deg1(V1 h) { return Graded(std::variant<V0, V1>(std::in_place_index<1>, std::move(h))); }

  int degree() const { return static_cast<int>(value_.index()); }
  const V0& x0() const { return std::get<0>(value_); }
  const V1& x1() const { return std::get<1>(value_); }

  void add_scaled(const Graded& other, double s) {
    if (other.degree() != degree()) throw InputError("adding graded elements of different degree");
    if (degree() == 0)
      std::get<0>(value_) = std::get<0>(value_) + s * other.x0();
    else
      std::get<1>(value_) = std::get<1>(value_) + s * other.x1();
  }

 private:
  explicit Graded(std::variant<V0, V1> v) : value_(std::move(v)) {}
  std::variant<V0, V1> value_;
};

template <class V0, class V1>
double graded_norm(const TwoTermLInfinity<V0, V1>& L, const Graded<V0, V1>& g) {
  return g.degree() == 0 ? L.space0.norm(g.x0()) : L.space1.norm(g.x1());
}

template <class V0, class V1>
Graded<V0, V1> sample_graded(const TwoTermLInfinity<V0, V1>& L, int degree, Rng& rng) {
  if (degree == 0) return Graded<V0, V1>::deg0(L.space0.sample(rng));
  if (degree == 1) return Graded<V0, V1>::deg1(L.space1.sample(rng));
  throw InputError("degree tags must be 0 or 1, got " + std::to_string(degree));
}

/// Denominator of every relative residual: 1 + prod_i (1 + |x_i|).
inline double relative_scale(std::initializer_list<double> norms) {
  double p = 1.0;
  for (double n : norms) p *= 1.0 + n;
  return 1.0 + p;
}

inline double relative_scale(std::span<const double> norms) {
  double p = 1.0;
  for (double n : norms) p *= 1.0 + n;
  return 1.0 + p;
}

/// l_k applied to homogeneous arguments; std::nullopt when the result is zero by grading.
template <class V0, class V1>
std::optional<Graded<V0, V1>> apply_bracket(const TwoTermLInfinity<V0, V1>& L,
                                            std::span<const Graded<V0, V1>> args) {
  using G = Graded<V0, V1>;
  switch (args.size()) {
    case 1:
      if (args[0].degree() == 1) return G::deg0(L.d(args[0].x1()));
      return std::nullopt;
    case 2: {
      const int a = args[0].degree(), b = args[1].degree();
      if (a == 0 && b == 0) return G::deg0(L.l2_00(args[0].x0(), args[1].x0()));
      if (a == 0 && b == 1) return G::deg1(L.l2_01(args[0].x0(), args[1].x1()));
      // l2(h, x) = chi(swap) l2(x, h) = -l2(x, h) for degrees (1, 0)
      if (a == 1 && b == 0) return G::deg1(-1.0 * L.l2_01(args[1].x0(), args[0].x1()));
      return std::nullopt;
    }
    case 3:
      if (args[0].degree() == 0 && args[1].degree() == 0 && args[2].degree() == 0)
        return G::deg1(L.l3(args[0].x0(), args[1].x0(), args[2].x0()));
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

/// The signed left-hand side of the generalized Jacobi identity
///   sum_{i+j=n+1} sum_sigma chi(sigma) (-1)^{i(j-1)} l_j(l_i(x_s(1..i)), x_s(i+1..n))
/// over (i, n-i)-unshuffles. std::nullopt when every term vanishes by grading.
template <class V0, class V1>
std::optional<Graded<V0, V1>> generalized_jacobi_sum(const TwoTermLInfinity<V0, V1>& L,
                                                     std::span<const Graded<V0, V1>> inputs) {
  using G = Graded<V0, V1>;
  const int n = static_cast<int>(inputs.size());
  if (n < 1 || n > 4) throw InputError("generalized Jacobi check supports 1 <= n <= 4, got " + std::to_string(n));
  GradedSignature degrees(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    degrees[static_cast<std::size_t>(p)] = inputs[static_cast<std::size_t>(p)].degree();
  }

  std::optional<G> acc;
  std::vector<G> inner_args, outer_args;
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    const double sign_ij = (i * (j - 1)) % 2 == 0 ? 1.0 : -1.0;
    for (const Permutation& sigma : unshuffles(i, n)) {
      inner_args.clear();
      for (int p = 0; p < i; ++p) inner_args.push_back(inputs[static_cast<std::size_t>(sigma(p))]);
      auto inner = apply_bracket(L, std::span<const G>(inner_args));
      if (!inner) continue;
      outer_args.clear();
      outer_args.push_back(std::move(*inner));
      for (int p = i; p < n; ++p) outer_args.push_back(inputs[static_cast<std::size_t>(sigma(p))]);
      auto term = apply_bracket(L, std::span<const G>(outer_args));
      if (!term) continue;
      const double s = chi(degrees, sigma) * sign_ij;
      if (!acc) {
        acc = std::move(*term);
        if (s < 0) {
          G zero = acc->degree() == 0 ? G::deg0(L.space0.zero()) : G::deg1(L.space1.zero());
          zero.add_scaled(*acc, -1.0);
          acc = std::move(zero);
        }
      } else {
        acc->add_scaled(*term, s);
      }
    }
  }
  return acc;
}

/// |generalized Jacobi sum| / (1 + prod(1 + |x_i|)); zero when the output degree
/// n - 3 + sum(deg) falls outside {0, 1}.
template <class V0, class V1>
double generalized_jacobi_residual(const TwoTermLInfinity<V0, V1>& L,
                                   std::span<const Graded<V0, V1>> inputs) {
  const auto sum = generalized_jacobi_sum(L, inputs);
  if (!sum) return 0.0;
  std::vector<double> norms;
  for (const auto& x : inputs) norms.push_back(graded_norm(L, x));
  return graded_norm(L, *sum) / relative_scale(std::span<const double>(norms));
}

/// Every degree signature with 1 <= n <= max_n.
inline std::vector<GradedSignature> all_signatures(int max_n = 4) {
  std::vector<GradedSignature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int mask = 0; mask < (1 << n); ++mask) {
      GradedSignature s(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) s[static_cast<std::size_t>(p)] = (mask >> (n - 1 - p)) & 1;
      out.push_back(std::move(s));
    }
  return out;
}

/// Worst trial of a seeded batch.
template <class Inputs>
struct Worst {
  double residual = 0.0;
  std::size_t trial = 0;
  std::optional<Inputs> inputs;

  void offer(double r, std::size_t t, const auto& make_inputs) {
    if (!inputs || r > residual) {
      residual = r;
      trial = t;
      inputs = make_inputs();
    }
  }
};

template <class V0, class V1>
Worst<std::vector<Graded<V0, V1>>> jacobi_batch(const TwoTermLInfinity<V0, V1>& L,
                                                const GradedSignature& signature, SampleBatch batch) {
  Worst<std::vector<Graded<V0, V1>>> worst;
  for (std::size_t t = batch.first; t < batch.end(); ++t) {
    Rng rng = trial_rng(batch.seed, t);
    std::vector<Graded<V0, V1>> inputs;
    for (int deg : signature) inputs.push_back(sample_graded(L, deg, rng));
    const double r = generalized_jacobi_residual(L, std::span<const Graded<V0, V1>>(inputs));
    worst.offer(r, t, [&] { return inputs; });
  }
  return worst;
}

/// Antisymmetry and multilinearity of the structure maps on random samples.
struct StructureResiduals {
  double l2_antisymmetry = 0.0;
  double l3_antisymmetry = 0.0;
  double multilinearity = 0.0;
  double max() const { return std::max({l2_antisymmetry, l3_antisymmetry, multilinearity}); }
};

template <class V0, class V1>
StructureResiduals structure_residuals(const TwoTermLInfinity<V0, V1>& L, SampleBatch batch) {
  StructureResiduals r;
  const auto& n0 = L.space0.norm;
  const auto& n1 = L.space1.norm;
  for (std::size_t t = batch.first; t < batch.end(); ++t) {
    Rng rng = trial_rng(batch.seed, t);
    const V0 x = L.space0.sample(rng), y = L.space0.sample(rng), z = L.space0.sample(rng);
    const V0 w = L.space0.sample(rng);
    const V1 h = L.space1.sample(rng), k = L.space1.sample(rng);
    const double a = uniform(rng), b = uniform(rng);
    const double sxyz = relative_scale({n0(x), n0(y), n0(z)});

    r.l2_antisymmetry = std::max(r.l2_antisymmetry, n0(V0(L.l2_00(x, y) + L.l2_00(y, x))) / relative_scale({n0(x), n0(y)}));
    const V1 base = L.l3(x, y, z);
    for (const V1& swapped : {L.l3(y, x, z), L.l3(x, z, y), L.l3(z, y, x)})
      r.l3_antisymmetry = std::max(r.l3_antisymmetry, n1(V1(base + swapped)) / sxyz);

    const V0 axw = a * x + b * w;
    const V1 ahk = a * h + b * k;
    const double lin[] = {
        n0(V0(L.d(ahk) - (a * L.d(h) + b * L.d(k)))) / relative_scale({n1(h), n1(k)}),
        n0(V0(L.l2_00(axw, y) - (a * L.l2_00(x, y) + b * L.l2_00(w, y)))) / relative_scale({n0(x), n0(w), n0(y)}),
        n1(V1(L.l2_01(axw, h) - (a * L.l2_01(x, h) + b * L.l2_01(w, h)))) / relative_scale({n0(x), n0(w), n1(h)}),
        n1(V1(L.l2_01(x, ahk) - (a * L.l2_01(x, h) + b * L.l2_01(x, k)))) / relative_scale({n0(x), n1(h), n1(k)}),
        n1(V1(L.l3(axw, y, z) - (a * L.l3(x, y, z) + b * L.l3(w, y, z)))) / relative_scale({n0(x), n0(w), n0(y), n0(z)}),
    };
    for (double v : lin) r.multilinearity = std::max(r.multilinearity, v);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

template <class S0, class S1, class T0, class T1>
struct LInftyHom {
  std::string name;
  LInftyPtr<S0, S1> src;
  LInftyPtr<T0, T1> dst;
  std::function<T0(const S0&)> phi0;
  std::function<T1(const S1&)> phi1;
  std::function<T1(const S0&, const S0&)> phi2;
};

template <class V0, class V1>
LInftyHom<V0, V1, V0, V1> identity_hom(LInftyPtr<V0, V1> L) {
  LInftyHom<V0, V1, V0, V1> id;
  id.name = "id(" + L->name + ")";
  id.src = L;
  id.dst = L;
  id.phi0 = [](const V0& x) { return x; };
  id.phi1 = [](const V1& h) { return h; };
  id.phi2 = [L](const V0&, const V0&) { return L->space1.zero(); };
  return id;
}

/// psi o phi: chain maps compose, (psi o phi)_2(x,y) = psi_2(phi_0 x, phi_0 y) + psi_1(phi_2(x,y)).
template <class A0, class A1, class B0, class B1, class C0, class C1>
LInftyHom<A0, A1, C0, C1> compose(const LInftyHom<B0, B1, C0, C1>& psi, const LInftyHom<A0, A1, B0, B1>& phi) {
  if (!phi.dst || !psi.src || phi.dst != psi.src)
    throw InputError("cannot compose " + psi.name + " after " + phi.name + ": target/source mismatch");
  LInftyHom<A0, A1, C0, C1> out;
  out.name = psi.name + "." + phi.name;
  out.src = phi.src;
  out.dst = psi.dst;
  out.phi0 = [psi, phi](const A0& x) { return psi.phi0(phi.phi0(x)); };
  out.phi1 = [psi, phi](const A1& h) { return psi.phi1(phi.phi1(h)); };
  out.phi2 = [psi, phi](const A0& x, const A0& y) {
    return C1(psi.phi2(phi.phi0(x), phi.phi0(y)) + psi.phi1(phi.phi2(x, y)));
  };
  return out;
}

template <class S0, class S1>
struct HomSample {
  S0 x, y, z;
  S1 h;
};

template <class S0, class S1>
struct HomResiduals {
  double chain = 0.0;
  double bracket0 = 0.0;
  double bracket1 = 0.0;
  double jacobiator = 0.0;
  /// phi0, phi1 linear; phi2 bilinear and antisymmetric.
  double linearity = 0.0;
  Worst<HomSample<S0, S1>> worst;

  double max() const { return std::max({chain, bracket0, bracket1, jacobiator, linearity}); }
};

template <class S0, class S1>
HomSample<S0, S1> sample_hom_inputs(const TwoTermLInfinity<S0, S1>& src, Rng& rng) {
  S0 x = src.space0.sample(rng);
  S0 y = src.space0.sample(rng);
  S0 z = src.space0.sample(rng);
  S1 h = src.space1.sample(rng);
  return {std::move(x), std::move(y), std::move(z), std::move(h)};
}

/// Maximum relative residuals over the batch of
///   chain:  d' phi1(h) - phi0(d h)
///   bracket0:  d'(phi2(x,y)) - phi0(l2(x,y)) + l2'(phi0 x, phi0 y)
///   bracket1:  phi2(x, dh) - phi1(l2(x,h)) + l2'(phi0 x, phi1 h)
///   jacobiator:  l3'(phi0 x, phi0 y, phi0 z) - phi1(l3(x,y,z))
///           - [phi2(x, l2(y,z)) + cyclic] - [l2'(phi0 x, phi2(y,z)) + cyclic]
template <class S0, class S1, class T0, class T1>
HomResiduals<S0, S1> hom_residuals(const LInftyHom<S0, S1, T0, T1>& phi, SampleBatch batch) {
  if (!phi.src || !phi.dst) throw InputError("homomorphism " + phi.name + " has no source or target");
  const auto& L = *phi.src;
  const auto& M = *phi.dst;
  const auto& sn0 = L.space0.norm;
  const auto& sn1 = L.space1.norm;
  HomResiduals<S0, S1> r;
  for (std::size_t t = batch.first; t < batch.end(); ++t) {
    Rng rng = trial_rng(batch.seed, t);
    const auto s = sample_hom_inputs(L, rng);
    const double a = uniform(rng), b = uniform(rng);
    const S0 &x = s.x, &y = s.y, &z = s.z;
    const S1& h = s.h;
    const T0 px = phi.phi0(x), py = phi.phi0(y), pz = phi.phi0(z);

    const double chain = M.space0.norm(T0(M.d(phi.phi1(h)) - phi.phi0(L.d(h)))) / relative_scale({sn1(h)});

    const double bracket0 =
        M.space0.norm(T0(M.d(phi.phi2(x, y)) - phi.phi0(L.l2_00(x, y)) + M.l2_00(px, py))) /
        relative_scale({sn0(x), sn0(y)});

    const double bracket1 =
        M.space1.norm(T1(phi.phi2(x, L.d(h)) - phi.phi1(L.l2_01(x, h)) + M.l2_01(px, phi.phi1(h)))) /
        relative_scale({sn0(x), sn1(h)});

    T1 lhs = M.l3(px, py, pz) - phi.phi1(L.l3(x, y, z));
    T1 rhs = phi.phi2(x, L.l2_00(y, z)) + phi.phi2(y, L.l2_00(z, x));
    rhs = rhs + phi.phi2(z, L.l2_00(x, y));
    rhs = rhs + M.l2_01(px, phi.phi2(y, z));
    rhs = rhs + M.l2_01(py, phi.phi2(z, x));
    rhs = rhs + M.l2_01(pz, phi.phi2(x, y));
    const double jacobiator = M.space1.norm(T1(lhs - rhs)) / relative_scale({sn0(x), sn0(y), sn0(z)});

    const S0 axz = a * x + b * z;
    const double lin[] = {
        M.space0.norm(T0(phi.phi0(axz) - (a * px + b * pz))) / relative_scale({sn0(x), sn0(z)}),
        M.space1.norm(T1(phi.phi1(S1(a * h)) - a * phi.phi1(h))) / relative_scale({sn1(h)}),
        M.space1.norm(T1(phi.phi2(axz, y) - (a * phi.phi2(x, y) + b * phi.phi2(z, y)))) /
            relative_scale({sn0(x), sn0(z), sn0(y)}),
        M.space1.norm(T1(phi.phi2(x, y) + phi.phi2(y, x))) / relative_scale({sn0(x), sn0(y)}),
    };
    double linearity = 0.0;
    for (double v : lin) linearity = std::max(linearity, v);

    r.chain = std::max(r.chain, chain);
    r.bracket0 = std::max(r.bracket0, bracket0);
    r.bracket1 = std::max(r.bracket1, bracket1);
    r.jacobiator = std::max(r.jacobiator, jacobiator);
    r.linearity = std::max(r.linearity, linearity);
    r.worst.offer(std::max({chain, bracket0, bracket1, jacobiator, linearity}), t, [&] { return s; });
  }
  return r;
}

// ---------------------------------------------------------------------------
// 2-homomorphisms
// ---------------------------------------------------------------------------

/// tau : from => to, a degree-raising map src.V0 -> dst.V1 with
///   d' tau = to_0 - from_0,   tau d = to_1 - from_1,
/// and the coherence law
///   from_2(x,y) - to_2(x,y) = l2'(from_0 x, tau y) + l2'(tau x, to_0 y) - tau(l2(x,y)).
template <class S0, class S1, class T0, class T1>
struct ChainHomotopy {
  std::string name;
  LInftyHom<S0, S1, T0, T1> from;
  LInftyHom<S0, S1, T0, T1> to;
  std::function<T1(const S0&)> tau;
};

template <class S0, class S1>
struct TwoHomSample {
  S0 x, y;
  S1 h;
};

template <class S0, class S1>
struct TwoHomResiduals {
  double homotopy0 = 0.0;
  double homotopy1 = 0.0;
  double coherence = 0.0;
  double linearity = 0.0;
  Worst<TwoHomSample<S0, S1>> worst;

  double max() const { return std::max({homotopy0, homotopy1, coherence, linearity}); }
};

template <class S0, class S1, class T0, class T1>
TwoHomResiduals<S0, S1> two_hom_residual(const ChainHomotopy<S0, S1, T0, T1>& tau, SampleBatch batch) {
  if (tau.from.src != tau.to.src || tau.from.dst != tau.to.dst || !tau.from.src || !tau.from.dst)
    throw InputError("2-homomorphism " + tau.name + " relates homomorphisms with different source or target");
  const auto& L = *tau.from.src;
  const auto& M = *tau.from.dst;
  const auto& sn0 = L.space0.norm;
  TwoHomResiduals<S0, S1> r;
  for (std::size_t t = batch.first; t < batch.end(); ++t) {
    Rng rng = trial_rng(batch.seed, t);
    TwoHomSample<S0, S1> s{L.space0.sample(rng), L.space0.sample(rng), L.space1.sample(rng)};
    const double a = uniform(rng);
    const S0 &x = s.x, &y = s.y;
    const S1& h = s.h;

    const double h0 =
        M.space0.norm(T0(tau.to.phi0(x) - tau.from.phi0(x) - M.d(tau.tau(x)))) / relative_scale({sn0(x)});
    const double h1 = M.space1.norm(T1(tau.to.phi1(h) - tau.from.phi1(h) - tau.tau(L.d(h)))) /
                      relative_scale({L.space1.norm(h)});

    const T1 tx = tau.tau(x), ty = tau.tau(y);
    // l2'(tau x, to_0 y) has degrees (1, 0) and equals -l2'(to_0 y, tau x)
    T1 defect = tau.from.phi2(x, y) - tau.to.phi2(x, y);
    defect = defect - M.l2_01(tau.from.phi0(x), ty);
    defect = defect + M.l2_01(tau.to.phi0(y), tx);
    defect = defect + tau.tau(L.l2_00(x, y));
    const double coh = M.space1.norm(defect) / relative_scale({sn0(x), sn0(y)});

    const double lin = M.space1.norm(T1(tau.tau(S0(x + a * y)) - (tx + a * ty))) / relative_scale({sn0(x), sn0(y)});

    r.homotopy0 = std::max(r.homotopy0, h0);
    r.homotopy1 = std::max(r.homotopy1, h1);
    r.coherence = std::max(r.coherence, coh);
    r.linearity = std::max(r.linearity, lin);
    r.worst.offer(std::max({h0, h1, coh, lin}), t, [&] { return s; });
  }
  return r;
}

/// Whiskering: tau : phi => psi between A -> B, composed on the left with chi : B -> C
/// is not needed here; the right whiskering by a homomorphism eta : Z -> A gives
/// tau.eta : phi.eta => psi.eta with component tau(eta_0(x)).
template <class Z0, class Z1, class S0, class S1, class T0, class T1>
ChainHomotopy<Z0, Z1, T0, T1> whisker_right(const ChainHomotopy<S0, S1, T0, T1>& tau,
                                           const LInftyHom<Z0, Z1, S0, S1>& eta) {
  ChainHomotopy<Z0, Z1, T0, T1> out;
  out.name = tau.name + "." + eta.name;
  out.from = compose(tau.from, eta);
  out.to = compose(tau.to, eta);
  out.tau = [tau, eta](const Z0& x) { return tau.tau(eta.phi0(x)); };
  return out;
}

// ---------------------------------------------------------------------------
// Categorical view: the 2-vector space (Ob = V0, Mor = V0 + V1) and bracket functor
// ---------------------------------------------------------------------------

template <class V0, class V1>
struct Morphism {
  V0 source;
  V1 arrow;
};

template <class V0, class V1>
class TwoVectorSpace {
 public:
  explicit TwoVectorSpace(LInftyPtr<V0, V1> L) : L_(std::move(L)) {}

  const V0& s(const Morphism<V0, V1>& f) const { return f.source; }
  V0 t(const Morphism<V0, V1>& f) const { return f.source + L_->d(f.arrow); }
  Morphism<V0, V1> i(const V0& x) const { return {x, L_->space1.zero()}; }

  /// g o f = (s(f), f + g); the second value is |t(f) - s(g)| (zero when composable).
  std::pair<Morphism<V0, V1>, double> compose(const Morphism<V0, V1>& g, const Morphism<V0, V1>& f) const {
    const double mismatch = L_->space0.norm(V0(t(f) - g.source));
    return {{f.source, V1(f.arrow + g.arrow)}, mismatch};
  }

  /// [1_z, f] = (l2(z, x), l2(z, f)).
  Morphism<V0, V1> bracket_left(const V0& z, const Morphism<V0, V1>& f) const {
    return {L_->l2_00(z, f.source), L_->l2_01(z, f.arrow)};
  }
  /// [f, 1_z] = (l2(x, z), l2(f, z)) with l2(f, z) = -l2(z, f).
  Morphism<V0, V1> bracket_right(const Morphism<V0, V1>& f, const V0& z) const {
    return {L_->l2_00(f.source, z), V1(-1.0 * L_->l2_01(z, f.arrow))};
  }

  double distance(const Morphism<V0, V1>& a, const Morphism<V0, V1>& b) const {
    return L_->space0.norm(V0(a.source - b.source)) + L_->space1.norm(V1(a.arrow - b.arrow));
  }

  const TwoTermLInfinity<V0, V1>& algebra() const { return *L_; }

 private:
  LInftyPtr<V0, V1> L_;
};

/// Category laws of the reconstructed 2-vector space and functoriality of the bracket
/// on morphisms; maximum relative residual over the batch.
template <class V0, class V1>
double categorical_view_check(LInftyPtr<V0, V1> Lp, SampleBatch batch) {
  const TwoVectorSpace<V0, V1> C(Lp);
  const auto& L = *Lp;
  const auto& n0 = L.space0.norm;
  const auto& n1 = L.space1.norm;
  double worst = 0.0;
  for (std::size_t t = batch.first; t < batch.end(); ++t) {
    Rng rng = trial_rng(batch.seed, t);
    const V0 x = L.space0.sample(rng), z = L.space0.sample(rng);
    const V1 fa = L.space1.sample(rng), ga = L.space1.sample(rng), ha = L.space1.sample(rng);
    const Morphism<V0, V1> f{x, fa};
    const Morphism<V0, V1> g{C.t(f), ga};
    const Morphism<V0, V1> h{C.t(g), ha};
    const double scale = relative_scale({n0(x), n0(z), n1(fa), n1(ga), n1(ha)});

    std::vector<double> r;
    // associativity and units
    const auto [gf, m1] = C.compose(g, f);
    const auto [hg, m2] = C.compose(h, g);
    const auto [h_gf, m3] = C.compose(h, gf);
    const auto [hg_f, m4] = C.compose(hg, f);
    r.push_back(m1 + m2 + m3 + m4 + C.distance(h_gf, hg_f));
    const auto [fi, m5] = C.compose(f, C.i(x));
    const auto [if_, m6] = C.compose(C.i(C.t(f)), f);
    r.push_back(m5 + m6 + C.distance(fi, f) + C.distance(if_, f));
    // source and target commute with the bracket
    const auto zf = C.bracket_left(z, f);
    const auto fz = C.bracket_right(f, z);
    r.push_back(n0(V0(C.s(zf) - L.l2_00(z, C.s(f)))) + n0(V0(C.t(zf) - L.l2_00(z, C.t(f)))));
    r.push_back(n0(V0(C.s(fz) - L.l2_00(C.s(f), z))) + n0(V0(C.t(fz) - L.l2_00(C.t(f), z))));
    // functoriality: [1_z, g o f] = [1_z, g] o [1_z, f], and on the right
    const auto [zgzf, m7] = C.compose(C.bracket_left(z, g), zf);
    r.push_back(m7 + C.distance(C.bracket_left(z, gf), zgzf));
    const auto [gzfz, m8] = C.compose(C.bracket_right(g, z), fz);
    r.push_back(m8 + C.distance(C.bracket_right(gf, z), gzfz));

    for (double v : r) worst = std::max(worst, v / scale);
  }
  return worst;
}

}  // namespace lie2
