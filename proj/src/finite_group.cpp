#include "lie2/finite_group.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "lie2/error.hpp"

namespace lie2 {

namespace {

std::string s(int v) { return std::to_string(v); }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// groups
// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  const std::string who = "group " + name_ + ": ";
  if (order_ < 1) throw InputError(who + "order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_))
    throw InputError(who + "table has " + std::to_string(table_.size()) + " entries, expected order^2");
  for (std::size_t c = 0; c < table_.size(); ++c)
    if (table_[c] < 0 || table_[c] >= order_)
      throw InputError(who + "entry " + s(table_[c]) + " at row " + s(static_cast<int>(c) / order_) + " is out of range");

  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError(who + "no two-sided identity");

  inverse_.assign(static_cast<std::size_t>(order_), -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw InputError(who + "element " + s(a) + " has no inverse");
  }

  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InputError(who + "not associative: (" + s(a) + " " + s(b) + ") " + s(c) + " != " + s(a) + " (" + s(b) +
                           " " + s(c) + ")");
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return FiniteGroup("Z" + std::to_string(n), n, std::move(t));
}

namespace {

const std::array<std::array<int, 3>, 6>& s3_elements() {
  static const std::array<std::array<int, 3>, 6> perms = [] {
    std::array<std::array<int, 3>, 6> out{};
    std::array<int, 3> p{0, 1, 2};
    int i = 0;
    do out[static_cast<std::size_t>(i++)] = p;
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric3() {
  const auto& P = s3_elements();
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[static_cast<std::size_t>(x)] = P[static_cast<std::size_t>(a)][static_cast<std::size_t>(P[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      t[static_cast<std::size_t>(a * 6 + b)] = static_cast<int>(std::find(P.begin(), P.end(), c) - P.begin());
    }
  return FiniteGroup("S3", 6, std::move(t));
}

int s3_sign(int element) {
  if (element < 0 || element >= 6) throw InputError("not an S3 element: " + s(element));
  const auto& p = s3_elements()[static_cast<std::size_t>(element)];
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
  return inversions % 2 == 0 ? 1 : -1;
}

FiniteGroup FiniteGroup::quaternion8() {
  // units 1, i, j, k as 0..3; unit_mul[a][b] = {sign, unit}
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int sg = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ua][ub];
      t[static_cast<std::size_t>(a * 8 + b)] = 2 * unit[ua][ub] + (sg < 0 ? 1 : 0);
    }
  return FiniteGroup("Q8", 8, std::move(t));
}

std::optional<std::string> homomorphism_witness(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& f) {
  if (f.size() != static_cast<std::size_t>(a.order()))
    return "map has " + std::to_string(f.size()) + " entries, expected " + s(a.order());
  for (int x : f)
    if (x < 0 || x >= b.order()) return "map value " + s(x) + " out of range";
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (f[static_cast<std::size_t>(a.mul(x, y))] != b.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
        return "f(" + s(x) + " " + s(y) + ") != f(" + s(x) + ") f(" + s(y) + ")";
  return std::nullopt;
}

namespace {

void require_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::set<int> set(elems.begin(), elems.end());
  if (set.size() != elems.size()) throw InputError("subgroup elements of " + g.name() + " repeat");
  for (int x : elems)
    if (x < 0 || x >= g.order()) throw InputError("subgroup element " + s(x) + " out of range");
  if (!set.count(g.identity())) throw InputError("subgroup misses the identity");
  for (int x : elems)
    for (int y : elems)
      if (!set.count(g.mul(x, g.inv(y))))
        throw InputError("not a subgroup of " + g.name() + ": " + s(x) + " * " + s(y) + "^-1 escapes");
}

}  // namespace

GroupPtr subgroup(const GroupPtr& g, const std::vector<int>& elements, const std::string& name) {
  require_subgroup(*g, elements);
  const int n = static_cast<int>(elements.size());
  std::vector<int> index(static_cast<std::size_t>(g->order()), -1);
  for (int i = 0; i < n; ++i) index[static_cast<std::size_t>(elements[static_cast<std::size_t>(i)])] = i;
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a * n + b)] =
          index[static_cast<std::size_t>(g->mul(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]))];
  return std::make_shared<const FiniteGroup>(name, n, std::move(t));
}

Quotient quotient(const GroupPtr& g, const std::vector<int>& normal) {
  require_subgroup(*g, normal);
  const std::set<int> N(normal.begin(), normal.end());
  for (int x = 0; x < g->order(); ++x)
    for (int n : normal)
      if (!N.count(g->conj(x, n))) throw InputError("not normal: " + s(x) + " " + s(n) + " " + s(x) + "^-1 escapes");

  std::vector<int> proj(static_cast<std::size_t>(g->order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g->order(); ++x) {
    if (proj[static_cast<std::size_t>(x)] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int n : normal) proj[static_cast<std::size_t>(g->mul(x, n))] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> t(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t[static_cast<std::size_t>(a * m + b)] =
          proj[static_cast<std::size_t>(g->mul(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];
  return {std::make_shared<const FiniteGroup>(g->name() + "/N", m, std::move(t)), std::move(proj)};
}

namespace {

GroupPtr group_from_json(const nlohmann::json& j) {
  try {
    const int order = j.at("order").get<int>();
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(order))
      throw InputError("table must have `order` rows");
    std::vector<int> t;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(order))
        throw InputError("every table row must have `order` entries");
      for (const auto& v : row) t.push_back(v.get<int>());
    }
    return std::make_shared<const FiniteGroup>(j.value("name", std::string("unnamed")), order, std::move(t));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group JSON: ") + e.what());
  }
}

nlohmann::json parse_text(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed " + what + " JSON: " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GroupPtr parse_group_json(const std::string& text) { return group_from_json(parse_text(text, "group")); }

GroupPtr load_group(const std::filesystem::path& path) { return parse_group_json(read_file(path)); }

// ---------------------------------------------------------------------------
// crossed modules
// ---------------------------------------------------------------------------

FiniteCrossedModule::FiniteCrossedModule(std::string name_, GroupPtr G_, GroupPtr H_, std::vector<int> partial_,
                                         std::vector<int> alpha_)
    : name(std::move(name_)), G(std::move(G_)), H(std::move(H_)), partial(std::move(partial_)), alpha(std::move(alpha_)) {
  if (!G || !H) throw InputError("crossed module " + name + " needs both groups");
  if (partial.size() != static_cast<std::size_t>(H->order()))
    throw InputError("crossed module " + name + ": partial needs |H| entries");
  if (alpha.size() != static_cast<std::size_t>(G->order() * H->order()))
    throw InputError("crossed module " + name + ": alpha needs |G| x |H| entries");
  for (int v : partial)
    if (v < 0 || v >= G->order()) throw InputError("crossed module " + name + ": partial value out of range");
  for (int v : alpha)
    if (v < 0 || v >= H->order()) throw InputError("crossed module " + name + ": alpha value out of range");
}

std::optional<std::string> crossed_module_witness(const FiniteCrossedModule& cm) {
  const FiniteGroup& G = *cm.G;
  const FiniteGroup& H = *cm.H;
  if (auto w = homomorphism_witness(H, G, cm.partial)) return "partial is not a homomorphism: " + *w;
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> row(cm.alpha.begin() + g * H.order(), cm.alpha.begin() + (g + 1) * H.order());
    if (auto w = homomorphism_witness(H, H, row)) return "alpha(" + s(g) + ") is not a homomorphism: " + *w;
  }
  for (int h = 0; h < H.order(); ++h)
    if (cm.act(G.identity(), h) != h) return "alpha(1) moves " + s(h);
  for (int g1 = 0; g1 < G.order(); ++g1)
    for (int g2 = 0; g2 < G.order(); ++g2)
      for (int h = 0; h < H.order(); ++h)
        if (cm.act(G.mul(g1, g2), h) != cm.act(g1, cm.act(g2, h)))
          return "alpha is not an action: alpha(" + s(g1) + " " + s(g2) + ")(" + s(h) + ") != alpha(" + s(g1) +
                 ")(alpha(" + s(g2) + ")(" + s(h) + "))";
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      if (cm.d(cm.act(g, h)) != G.conj(g, cm.d(h)))
        return "d(alpha(g) h) != g d(h) g^-1 at g=" + s(g) + ", h=" + s(h);
  for (int h1 = 0; h1 < H.order(); ++h1)
    for (int h2 = 0; h2 < H.order(); ++h2)
      if (cm.act(cm.d(h1), h2) != H.conj(h1, h2))
        return "alpha(d h1) h2 != h1 h2 h1^-1 at h1=" + s(h1) + ", h2=" + s(h2);
  return std::nullopt;
}

std::int64_t crossed_module_check_count(const FiniteCrossedModule& cm) {
  const std::int64_t g = cm.G->order(), h = cm.H->order();
  return h * h + g * h * h + h + g * g * h + g * h + h * h;
}

FiniteCrossedModule codiscrete_module(const GroupPtr& g) {
  const int n = g->order();
  std::vector<int> id(static_cast<std::size_t>(n)), alpha(static_cast<std::size_t>(n * n));
  std::iota(id.begin(), id.end(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) alpha[static_cast<std::size_t>(a * n + b)] = g->conj(a, b);
  return FiniteCrossedModule("E" + g->name(), g, g, std::move(id), std::move(alpha));
}

FiniteCrossedModule skeletal_module(const GroupPtr& g, const GroupPtr& h) {
  if (!h->is_abelian()) throw InputError("skeletal crossed module needs an abelian H, got " + h->name());
  std::vector<int> d(static_cast<std::size_t>(h->order()), g->identity());
  std::vector<int> alpha(static_cast<std::size_t>(g->order() * h->order()));
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < h->order(); ++b) alpha[static_cast<std::size_t>(a * h->order() + b)] = b;
  return FiniteCrossedModule("(" + g->name() + "," + h->name() + ",trivial)", g, h, std::move(d), std::move(alpha));
}

FiniteCrossedModule normal_subgroup_module(const GroupPtr& g, const std::vector<int>& normal, const std::string& n_name) {
  quotient(g, normal);  // normality check
  const GroupPtr N = subgroup(g, normal, n_name);
  const int m = N->order();
  std::vector<int> index(static_cast<std::size_t>(g->order()), -1);
  for (int i = 0; i < m; ++i) index[static_cast<std::size_t>(normal[static_cast<std::size_t>(i)])] = i;
  std::vector<int> alpha(static_cast<std::size_t>(g->order() * m));
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < m; ++b)
      alpha[static_cast<std::size_t>(a * m + b)] =
          index[static_cast<std::size_t>(g->conj(a, normal[static_cast<std::size_t>(b)]))];
  return FiniteCrossedModule("(" + g->name() + "," + n_name + ")", g, N, normal, std::move(alpha));
}

FiniteCrossedModule parse_crossed_module_json(const std::string& text, const std::filesystem::path& groups_dir) {
  const nlohmann::json j = parse_text(text, "crossed module");
  auto group = [&](const char* key) -> GroupPtr {
    if (!j.contains(key)) throw InputError(std::string("crossed module JSON lacks `") + key + "`");
    const auto& v = j.at(key);
    if (v.is_string()) return load_group(groups_dir / (v.get<std::string>() + ".json"));
    if (v.is_object()) return group_from_json(v);
    throw InputError(std::string("`") + key + "` must be a group object or a group file name");
  };
  const GroupPtr G = group("G"), H = group("H");
  try {
    std::vector<int> partial = j.at("partial").get<std::vector<int>>();
    const auto rows = j.at("alpha").get<std::vector<std::vector<int>>>();
    if (rows.size() != static_cast<std::size_t>(G->order())) throw InputError("alpha must have |G| rows");
    std::vector<int> alpha;
    for (const auto& r : rows) {
      if (r.size() != static_cast<std::size_t>(H->order())) throw InputError("alpha rows must have |H| entries");
      alpha.insert(alpha.end(), r.begin(), r.end());
    }
    return FiniteCrossedModule(j.value("name", std::string("unnamed")), G, H, std::move(partial), std::move(alpha));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed crossed module JSON: ") + e.what());
  }
}

FiniteCrossedModule load_crossed_module(const std::filesystem::path& path) {
  return parse_crossed_module_json(read_file(path), path.parent_path().parent_path() / "groups");
}

// ---------------------------------------------------------------------------
// 2-groups
// ---------------------------------------------------------------------------

FiniteTwoGroup::FiniteTwoGroup(FiniteCrossedModule cm) : cm_(std::move(cm)) {
  if (auto w = crossed_module_witness(cm_)) throw AxiomError("crossed module " + cm_.name + ": " + *w);
}

int FiniteTwoGroup::mul(int m1, int m2) const {
  const int p1 = base(m1), h1 = arrow(m1), p2 = base(m2), h2 = arrow(m2);
  return morphism(cm_.G->mul(p1, p2), cm_.H->mul(h1, cm_.act(p1, h2)));
}

int FiniteTwoGroup::mor_inv(int m) const {
  const int p = base(m), h = arrow(m);
  const int pi = cm_.G->inv(p);
  return morphism(pi, cm_.act(pi, cm_.H->inv(h)));
}

std::optional<int> FiniteTwoGroup::compose(int m1, int m2) const {
  if (!composable(m1, m2)) return std::nullopt;
  return morphism(base(m2), cm_.H->mul(arrow(m1), arrow(m2)));
}

int FiniteTwoGroup::hom_count(int p, int q) const {
  int n = 0;
  for (int h = 0; h < cm_.H->order(); ++h) n += target(morphism(p, h)) == q;
  return n;
}

TwoGroupReport verify_two_group(const FiniteTwoGroup& c) {
  TwoGroupReport r;
  auto fail = [&r](std::string w) {
    if (r.ok) r.witness = std::move(w);
    r.ok = false;
  };
  auto check = [&r, &fail](bool cond, auto&& describe) {
    ++r.checks;
    if (!cond && r.ok) fail(describe());
  };
  const FiniteGroup& G = *c.crossed_module().G;
  const int M = c.num_morphisms();

  for (int a = 0; a < M; ++a) {
    check(c.mul(a, c.mor_inv(a)) == c.unit(G.identity()) && c.mul(c.mor_inv(a), a) == c.unit(G.identity()),
          [&] { return "morphism " + s(a) + " has no inverse in the morphism group"; });
    for (int b = 0; b < M; ++b) {
      const int ab = c.mul(a, b);
      check(c.source(ab) == G.mul(c.source(a), c.source(b)), [&] { return "s(" + s(a) + " " + s(b) + ") != s s"; });
      check(c.target(ab) == G.mul(c.target(a), c.target(b)), [&] { return "t(" + s(a) + " " + s(b) + ") != t t"; });
      for (int e = 0; e < M; ++e)
        check(c.mul(ab, e) == c.mul(a, c.mul(b, e)), [&] { return "morphism product not associative"; });
    }
  }
  for (int p = 0; p < G.order(); ++p) {
    check(c.source(c.unit(p)) == p && c.target(c.unit(p)) == p, [&] { return "s i or t i differs from id at " + s(p); });
    for (int q = 0; q < G.order(); ++q)
      check(c.unit(G.mul(p, q)) == c.mul(c.unit(p), c.unit(q)), [&] { return "i is not a homomorphism"; });
  }

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      const auto ab = c.compose(a, b);
      const bool expect = c.source(a) == c.target(b);
      check(ab.has_value() == expect, [&] { return "composition defined off s = t at " + s(a) + ", " + s(b); });
      if (!ab) continue;
      pairs.emplace_back(a, b);
      check(c.source(*ab) == c.source(b) && c.target(*ab) == c.target(a),
            [&] { return "wrong source or target of " + s(a) + " o " + s(b); });
    }
  r.composable_pairs = static_cast<std::int64_t>(pairs.size());

  for (int a = 0; a < M; ++a) {
    check(c.compose(c.unit(c.target(a)), a) == a && c.compose(a, c.unit(c.source(a))) == a,
          [&] { return "unit law fails at " + s(a); });
    const int inv = c.morphism(c.target(a), c.crossed_module().H->inv(c.arrow(a)));
    check(c.compose(inv, a) == c.unit(c.source(a)) && c.compose(a, inv) == c.unit(c.target(a)),
          [&] { return "no composition inverse for " + s(a); });
  }
  for (const auto& [b, e] : pairs)
    for (int a = 0; a < M; ++a) {
      if (!c.composable(a, b)) continue;
      check(c.compose(*c.compose(a, b), e) == c.compose(a, *c.compose(b, e)),
            [&] { return "composition not associative at " + s(a) + ", " + s(b) + ", " + s(e); });
    }
  for (const auto& [a, b] : pairs)
    for (const auto& [e, f] : pairs) {
      ++r.interchange_quadruples;
      const int lhs = c.mul(*c.compose(a, b), *c.compose(e, f));
      const auto rhs = c.compose(c.mul(a, e), c.mul(b, f));
      check(rhs && *rhs == lhs, [&] {
        return "interchange fails at (" + s(a) + " o " + s(b) + ")(" + s(e) + " o " + s(f) + ")";
      });
    }
  return r;
}

// ---------------------------------------------------------------------------
// homomorphisms and kernels
// ---------------------------------------------------------------------------

TwoGroupHom hom_from_crossed(std::string name, const FiniteTwoGroup& src, const FiniteTwoGroup& dst,
                             const std::vector<int>& f, const std::vector<int>& phi) {
  const auto& cs = src.crossed_module();
  if (auto w = homomorphism_witness(*cs.G, *dst.crossed_module().G, f)) throw InputError(name + ": objects: " + *w);
  if (auto w = homomorphism_witness(*cs.H, *dst.crossed_module().H, phi)) throw InputError(name + ": arrows: " + *w);
  std::vector<int> mor(static_cast<std::size_t>(src.num_morphisms()));
  for (int m = 0; m < src.num_morphisms(); ++m)
    mor[static_cast<std::size_t>(m)] =
        dst.morphism(f[static_cast<std::size_t>(src.base(m))], phi[static_cast<std::size_t>(src.arrow(m))]);
  return {std::move(name), &src, &dst, f, std::move(mor)};
}

TwoGroupHom identity_hom(const FiniteTwoGroup& c) {
  std::vector<int> ob(static_cast<std::size_t>(c.num_objects())), mor(static_cast<std::size_t>(c.num_morphisms()));
  std::iota(ob.begin(), ob.end(), 0);
  std::iota(mor.begin(), mor.end(), 0);
  return {"id", &c, &c, std::move(ob), std::move(mor)};
}

TwoGroupHom terminal_hom(const FiniteTwoGroup& c, const FiniteTwoGroup& point) {
  if (point.num_morphisms() != 1) throw InputError("terminal 2-group must have a single morphism");
  return {"to point", &c, &point, std::vector<int>(static_cast<std::size_t>(c.num_objects()), 0),
          std::vector<int>(static_cast<std::size_t>(c.num_morphisms()), 0)};
}

std::optional<std::string> two_group_hom_witness(const TwoGroupHom& F) {
  const FiniteTwoGroup& A = *F.src;
  const FiniteTwoGroup& B = *F.dst;
  if (F.on_objects.size() != static_cast<std::size_t>(A.num_objects()) ||
      F.on_morphisms.size() != static_cast<std::size_t>(A.num_morphisms()))
    return std::string("map sizes do not match the source 2-group");
  if (auto w = homomorphism_witness(*A.crossed_module().G, *B.crossed_module().G, F.on_objects))
    return "on objects: " + *w;
  for (int m : F.on_morphisms)
    if (m < 0 || m >= B.num_morphisms()) return "morphism image " + s(m) + " out of range";
  auto Fo = [&](int p) { return F.on_objects[static_cast<std::size_t>(p)]; };
  auto Fm = [&](int m) { return F.on_morphisms[static_cast<std::size_t>(m)]; };
  for (int a = 0; a < A.num_morphisms(); ++a) {
    if (B.source(Fm(a)) != Fo(A.source(a))) return "does not commute with s at " + s(a);
    if (B.target(Fm(a)) != Fo(A.target(a))) return "does not commute with t at " + s(a);
    for (int b = 0; b < A.num_morphisms(); ++b) {
      if (Fm(A.mul(a, b)) != B.mul(Fm(a), Fm(b))) return "on morphisms: F(" + s(a) + " " + s(b) + ") != F F";
      if (const auto ab = A.compose(a, b); ab && B.compose(Fm(a), Fm(b)) != Fm(*ab))
        return "does not preserve composition at " + s(a) + ", " + s(b);
    }
  }
  for (int p = 0; p < A.num_objects(); ++p)
    if (Fm(A.unit(p)) != B.unit(Fo(p))) return "does not commute with i at " + s(p);
  return std::nullopt;
}

StrictKernel strict_kernel(const TwoGroupHom& F) {
  if (auto w = two_group_hom_witness(F)) throw InputError(F.name + " is not a strict homomorphism: " + *w);
  const int e = F.dst->crossed_module().G->identity();
  StrictKernel k;
  for (int p = 0; p < F.src->num_objects(); ++p)
    if (F.on_objects[static_cast<std::size_t>(p)] == e) k.objects.push_back(p);
  for (int m = 0; m < F.src->num_morphisms(); ++m)
    if (F.on_morphisms[static_cast<std::size_t>(m)] == F.dst->unit(e)) k.morphisms.push_back(m);
  return k;
}

StrictExactnessReport strict_kernel_exactness(const TwoGroupHom& iota, const TwoGroupHom& pi) {
  if (iota.dst != pi.src) throw InputError(iota.name + " and " + pi.name + " are not composable");
  const StrictKernel kernel_iota = strict_kernel(iota);
  const StrictKernel kernel_pi = strict_kernel(pi);
  StrictExactnessReport r;
  r.iota = iota.name;
  r.pi = pi.name;
  r.iota_injective_objects = kernel_iota.objects.size() == 1;
  r.iota_injective_morphisms = kernel_iota.morphisms.size() == 1;
  const std::vector<int> im_ob = sorted_unique(iota.on_objects), im_mor = sorted_unique(iota.on_morphisms);
  r.middle_objects = {im_ob.size(), kernel_pi.objects.size(), im_ob == kernel_pi.objects};
  r.middle_morphisms = {im_mor.size(), kernel_pi.morphisms.size(), im_mor == kernel_pi.morphisms};
  r.pi_surjective_objects = sorted_unique(pi.on_objects).size() == static_cast<std::size_t>(pi.dst->num_objects());
  r.pi_surjective_morphisms =
      sorted_unique(pi.on_morphisms).size() == static_cast<std::size_t>(pi.dst->num_morphisms());
  return r;
}

BoundarySequence boundary_sequence(const FiniteCrossedModule& cm) {
  if (sorted_unique(cm.partial).size() != cm.partial.size())
    throw InputError("crossed module " + cm.name + " has a non-injective boundary map");
  BoundarySequence seq;
  seq.middle = std::make_unique<FiniteTwoGroup>(cm);
  const GroupPtr H = cm.H;
  const Quotient q = quotient(cm.G, cm.partial);
  seq.kernel = std::make_unique<FiniteTwoGroup>(codiscrete_module(H));
  const auto one = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  seq.quotient = std::make_unique<FiniteTwoGroup>(skeletal_module(q.group, one));

  std::vector<int> id_h(static_cast<std::size_t>(H->order()));
  std::iota(id_h.begin(), id_h.end(), 0);
  seq.iota = hom_from_crossed("iota", *seq.kernel, *seq.middle, cm.partial, id_h);
  seq.pi = hom_from_crossed("pi", *seq.middle, *seq.quotient, q.projection,
                            std::vector<int>(static_cast<std::size_t>(H->order()), 0));
  return seq;
}

BoundarySequence normal_subgroup_sequence(const GroupPtr& g, const std::vector<int>& normal, const std::string& n_name) {
  return boundary_sequence(normal_subgroup_module(g, normal, n_name));
}

}  // namespace lie2
