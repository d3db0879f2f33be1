#pragma once

// Finite groups as multiplication tables, finite crossed modules, and the strict 2-group
// they define. Everything here is exact: checks enumerate all elements, pairs, triples.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lie2 {

/// Elements are 0..order-1; table[a * order + b] = a * b. The constructor checks closure,
/// a two-sided identity, inverses and associativity, and throws InputError with a witness.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, int order, std::vector<int> table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }
  const std::vector<int>& table() const { return table_; }
  bool is_abelian() const;

  static FiniteGroup cyclic(int n);
  /// Permutations of {0,1,2} in lexicographic order; element 0 is the identity.
  static FiniteGroup symmetric3();
  /// {1, -1, i, -i, j, -j, k, -k} in that order.
  static FiniteGroup quaternion8();
  static FiniteGroup trivial() { return cyclic(1); }

 private:
  std::string name_;
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Map a -> f[a] between tables; a non-homomorphism yields a "f(a b) != f(a) f(b)" witness.
std::optional<std::string> homomorphism_witness(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& f);

/// Sign of an S3 element as indexed by FiniteGroup::symmetric3.
int s3_sign(int element);

/// The elements listed (in that order) as a group with the restricted table.
/// Throws InputError unless they form a subgroup.
GroupPtr subgroup(const GroupPtr& g, const std::vector<int>& elements, const std::string& name);

struct Quotient {
  GroupPtr group;
  std::vector<int> projection;  ///< G -> G/N
};
/// Cosets numbered by first appearance. Throws InputError unless N is a normal subgroup.
Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_subgroup);

/// {"name", "order", "table": [[...], ...]} with 0-based rows.
GroupPtr parse_group_json(const std::string& text);
GroupPtr load_group(const std::filesystem::path& path);

/// (G, H, d: H -> G, alpha: G x H -> H). Only the shape is checked at construction;
/// the axioms are checked by crossed_module_witness.
struct FiniteCrossedModule {
  std::string name;
  GroupPtr G, H;
  std::vector<int> partial;  ///< size |H|
  std::vector<int> alpha;    ///< alpha[g * |H| + h] = alpha(g)(h)

  FiniteCrossedModule(std::string name, GroupPtr G, GroupPtr H, std::vector<int> partial, std::vector<int> alpha);

  int d(int h) const { return partial[static_cast<std::size_t>(h)]; }
  int act(int g, int h) const { return alpha[static_cast<std::size_t>(g * H->order() + h)]; }
};

/// First failing axiom with the offending elements, or nothing when all hold:
/// d a homomorphism, each alpha(g) a homomorphism, alpha an action,
/// d(alpha(g)h) = g d(h) g^-1, and alpha(d h1) h2 = h1 h2 h1^-1.
std::optional<std::string> crossed_module_witness(const FiniteCrossedModule& cm);
/// Number of elementary equalities crossed_module_witness evaluates.
std::int64_t crossed_module_check_count(const FiniteCrossedModule& cm);

/// (G, G, conjugation, identity): one morphism between any two objects.
FiniteCrossedModule codiscrete_module(const GroupPtr& g);
/// (G, H, trivial action, trivial d); H must be abelian.
FiniteCrossedModule skeletal_module(const GroupPtr& g, const GroupPtr& h);
/// (G, N, conjugation, inclusion) for a normal subgroup N listed by its elements.
FiniteCrossedModule normal_subgroup_module(const GroupPtr& g, const std::vector<int>& normal, const std::string& n_name);

/// Crossed-module JSON: {"name", "G", "H", "partial": [...], "alpha": [[...], ...]} where
/// G and H are inline group objects or names of files in `groups_dir` (without .json).
FiniteCrossedModule parse_crossed_module_json(const std::string& text, const std::filesystem::path& groups_dir);
/// Groups referenced by name are looked up in ../groups next to the file.
FiniteCrossedModule load_crossed_module(const std::filesystem::path& path);

/// Morphisms are pairs (p, h) encoded as p * |H| + h, multiplied in G x| H.
/// s(p,h) = p, t(p,h) = d(h) p, i(p) = (p,1), (p1,h1) o (p2,h2) = (p2, h1 h2) when p1 = d(h2) p2.
class FiniteTwoGroup {
 public:
  /// Throws AxiomError carrying the witness when cm is not a crossed module.
  explicit FiniteTwoGroup(FiniteCrossedModule cm);

  const FiniteCrossedModule& crossed_module() const { return cm_; }
  int num_objects() const { return cm_.G->order(); }
  int num_morphisms() const { return cm_.G->order() * cm_.H->order(); }

  int morphism(int p, int h) const { return p * cm_.H->order() + h; }
  int base(int m) const { return m / cm_.H->order(); }
  int arrow(int m) const { return m % cm_.H->order(); }

  int source(int m) const { return base(m); }
  int target(int m) const { return cm_.G->mul(cm_.d(arrow(m)), base(m)); }
  int unit(int p) const { return morphism(p, cm_.H->identity()); }
  int mul(int m1, int m2) const;
  int mor_inv(int m) const;
  bool composable(int m1, int m2) const { return source(m1) == target(m2); }
  /// m1 after m2; empty unless composable.
  std::optional<int> compose(int m1, int m2) const;

  /// Number of morphisms p -> q.
  int hom_count(int p, int q) const;

 private:
  FiniteCrossedModule cm_;
};

struct TwoGroupReport {
  bool ok = true;
  std::int64_t checks = 0;
  std::int64_t composable_pairs = 0;
  std::int64_t interchange_quadruples = 0;
  std::string witness;  ///< first failure, empty when ok
};

/// Exhaustive: s, t, i group homomorphisms; s i = t i = id; composition defined exactly on
/// composable pairs with the right source and target; associativity on composable triples;
/// unit laws; inverses for composition; interchange on all composable quadruples.
TwoGroupReport verify_two_group(const FiniteTwoGroup& c);

/// Strict homomorphism given by maps on objects and on morphisms.
struct TwoGroupHom {
  std::string name;
  const FiniteTwoGroup* src;
  const FiniteTwoGroup* dst;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;
};

/// From group homomorphisms f: G -> G' and phi: H -> H' as (p, h) -> (f p, phi h).
TwoGroupHom hom_from_crossed(std::string name, const FiniteTwoGroup& src, const FiniteTwoGroup& dst,
                             const std::vector<int>& f, const std::vector<int>& phi);
TwoGroupHom identity_hom(const FiniteTwoGroup& c);
/// To the 2-group with one object and one morphism.
TwoGroupHom terminal_hom(const FiniteTwoGroup& c, const FiniteTwoGroup& point);

/// Both maps homomorphisms, commuting with s, t, i and composition.
std::optional<std::string> two_group_hom_witness(const TwoGroupHom& f);

struct StrictKernel {
  std::vector<int> objects;    ///< sorted
  std::vector<int> morphisms;  ///< sorted
};
/// Preimages of the unit object and of its identity morphism. Throws InputError with the
/// witness when f is not a strict homomorphism.
StrictKernel strict_kernel(const TwoGroupHom& f);

struct ExactnessAt {
  std::size_t image = 0;
  std::size_t kernel = 0;
  bool equal = false;
};

/// 1 -> A -> B -> C -> 1 at each of the three spots, on objects and on morphisms:
/// iota injective, im iota = ker pi, pi surjective.
struct StrictExactnessReport {
  std::string iota, pi;
  bool iota_injective_objects = false, iota_injective_morphisms = false;
  ExactnessAt middle_objects, middle_morphisms;
  bool pi_surjective_objects = false, pi_surjective_morphisms = false;
  bool pass() const {
    return iota_injective_objects && iota_injective_morphisms && middle_objects.equal && middle_morphisms.equal &&
           pi_surjective_objects && pi_surjective_morphisms;
  }
};

/// Throws InputError when the maps are not composable strict homomorphisms.
StrictExactnessReport strict_kernel_exactness(const TwoGroupHom& iota, const TwoGroupHom& pi);

/// codiscrete(H) -> (G, H, d, alpha) -> (G / d(H), 1) for a crossed module with injective d,
/// with iota = (d, id) and pi = (quotient, trivial). Owns its 2-groups.
struct BoundarySequence {
  std::unique_ptr<FiniteTwoGroup> kernel, middle, quotient;
  TwoGroupHom iota, pi;
};
/// Throws InputError unless d is injective, AxiomError unless cm is a crossed module.
BoundarySequence boundary_sequence(const FiniteCrossedModule& cm);
BoundarySequence normal_subgroup_sequence(const GroupPtr& g, const std::vector<int>& normal, const std::string& n_name);

}  // namespace lie2
