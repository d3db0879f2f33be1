#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>

#include "lie2/error.hpp"
#include "lie2/finite_group.hpp"

using namespace lie2;

namespace {

const std::filesystem::path kData = LIE2_DATA_DIR;

GroupPtr ptr(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

std::vector<std::string> bundled_modules() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(kData / "crossed_modules")) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(FiniteGroup, BuildersMatchBundledTables) {
  EXPECT_EQ(load_group(kData / "groups/s3.json")->table(), FiniteGroup::symmetric3().table());
  EXPECT_EQ(load_group(kData / "groups/q8.json")->table(), FiniteGroup::quaternion8().table());
  for (int n : {2, 3, 4})
    EXPECT_EQ(load_group(kData / ("groups/z" + std::to_string(n) + ".json"))->table(), FiniteGroup::cyclic(n).table());
}

TEST(FiniteGroup, QuaternionRelations) {
  const auto q = FiniteGroup::quaternion8();
  const int one = 0, minus = 1, i = 2, j = 4, k = 6;
  EXPECT_EQ(q.identity(), one);
  for (int u : {i, j, k}) EXPECT_EQ(q.mul(u, u), minus);
  EXPECT_EQ(q.mul(q.mul(i, j), k), minus);
  EXPECT_EQ(q.mul(i, j), k);
  EXPECT_EQ(q.mul(j, i), k + 1);
  EXPECT_FALSE(q.is_abelian());
}

TEST(FiniteGroup, SymmetricGroup) {
  const auto g = FiniteGroup::symmetric3();
  EXPECT_EQ(g.identity(), 0);
  EXPECT_FALSE(g.is_abelian());
  int even = 0;
  for (int x = 0; x < 6; ++x) even += s3_sign(x) == 1;
  EXPECT_EQ(even, 3);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) EXPECT_EQ(s3_sign(g.mul(a, b)), s3_sign(a) * s3_sign(b));
}

TEST(FiniteGroup, RejectsMalformedTables) {
  EXPECT_THROW(FiniteGroup("x", 2, {0, 1, 1}), InputError);
  EXPECT_THROW(FiniteGroup("x", 2, {0, 1, 1, 2}), InputError);
  EXPECT_THROW(FiniteGroup("x", 2, {0, 0, 0, 0}), InputError);   // no identity
  EXPECT_THROW(FiniteGroup("x", 2, {0, 1, 1, 1}), InputError);   // 1 has no inverse
  // Latin square that is not associative
  EXPECT_THROW(FiniteGroup("x", 5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}),
               InputError);
  EXPECT_THROW(parse_group_json(R"({"order": 2, "table": [[0, 1]]})"), InputError);
  EXPECT_THROW(parse_group_json("not json"), InputError);
}

TEST(FiniteGroup, QuotientAndSubgroup) {
  const auto s3 = ptr(FiniteGroup::symmetric3());
  const Quotient q = quotient(s3, {0, 3, 4});
  EXPECT_EQ(q.group->order(), 2);
  for (int x = 0; x < 6; ++x) EXPECT_EQ(q.projection[static_cast<std::size_t>(x)], s3_sign(x) == 1 ? 0 : 1);
  EXPECT_FALSE(homomorphism_witness(*s3, *q.group, q.projection));
  EXPECT_THROW(quotient(s3, {0, 1}), InputError);  // a transposition generates a non-normal subgroup
  EXPECT_THROW(subgroup(s3, {0, 1, 3}, "bad"), InputError);
  EXPECT_EQ(subgroup(s3, {0, 3, 4}, "A3")->table(), FiniteGroup::cyclic(3).table());
}

TEST(CrossedModule, BundledFixturesSatisfyAxioms) {
  const auto files = bundled_modules();
  ASSERT_GE(files.size(), 7u);
  for (const auto& f : files) {
    const FiniteCrossedModule cm = load_crossed_module(f);
    EXPECT_FALSE(crossed_module_witness(cm)) << f << ": " << crossed_module_witness(cm).value_or("");
  }
}

TEST(CrossedModule, BuildersMatchFixtures) {
  const auto s3 = ptr(FiniteGroup::symmetric3());
  const auto a = normal_subgroup_module(s3, {0, 3, 4}, "A3");
  const auto b = load_crossed_module(kData / "crossed_modules/s3_a3.json");
  EXPECT_EQ(a.partial, b.partial);
  EXPECT_EQ(a.alpha, b.alpha);
  const auto e = load_crossed_module(kData / "crossed_modules/e_q8.json");
  const auto eq = codiscrete_module(ptr(FiniteGroup::quaternion8()));
  EXPECT_EQ(e.alpha, eq.alpha);
}

TEST(CrossedModule, BrokenAxiomsReportWitness) {
  const auto s3 = ptr(FiniteGroup::symmetric3());
  const auto z3 = ptr(FiniteGroup::cyclic(3));
  // sign action with the inversion moved onto even permutations: not an action
  std::vector<int> alpha;
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 3; ++h) alpha.push_back(g == 3 ? (3 - h) % 3 : h);
  const FiniteCrossedModule bad("bad", s3, z3, {0, 0, 0}, alpha);
  const auto w = crossed_module_witness(bad);
  ASSERT_TRUE(w);
  EXPECT_NE(w->find("action"), std::string::npos) << *w;
  EXPECT_THROW(FiniteTwoGroup{bad}, AxiomError);

  // conjugation action of S3 on itself with trivial d violates alpha(d h1) h2 = h1 h2 h1^-1
  auto e = codiscrete_module(s3);
  e.partial.assign(6, 0);
  const auto w2 = crossed_module_witness(e);
  ASSERT_TRUE(w2);
  EXPECT_NE(w2->find("alpha(d h1) h2"), std::string::npos) << *w2;

  // skeletal needs abelian H
  EXPECT_THROW(skeletal_module(s3, s3), InputError);
}

TEST(TwoGroup, AllBundledFixturesPassExhaustively) {
  for (const auto& f : bundled_modules()) {
    const FiniteTwoGroup c(load_crossed_module(f));
    const TwoGroupReport r = verify_two_group(c);
    EXPECT_TRUE(r.ok) << f << ": " << r.witness;
    const std::int64_t h = c.crossed_module().H->order();
    EXPECT_EQ(r.composable_pairs, c.num_objects() * h * h) << f;
    EXPECT_EQ(r.interchange_quadruples, r.composable_pairs * r.composable_pairs) << f;
  }
}

TEST(TwoGroup, CodiscreteHasOneMorphismBetweenAnyObjects) {
  for (const auto& g : {FiniteGroup::symmetric3(), FiniteGroup::quaternion8(), FiniteGroup::cyclic(4)}) {
    const FiniteTwoGroup c(codiscrete_module(ptr(g)));
    for (int p = 0; p < c.num_objects(); ++p)
      for (int q = 0; q < c.num_objects(); ++q) EXPECT_EQ(c.hom_count(p, q), 1);
  }
}

TEST(TwoGroup, SkeletalComposesOnlyOnEqualObjects) {
  const FiniteTwoGroup c(skeletal_module(ptr(FiniteGroup::symmetric3()), ptr(FiniteGroup::cyclic(2))));
  for (int a = 0; a < c.num_morphisms(); ++a)
    for (int b = 0; b < c.num_morphisms(); ++b) EXPECT_EQ(c.composable(a, b), c.base(a) == c.base(b));
  for (int p = 0; p < 6; ++p) EXPECT_EQ(c.hom_count(p, p), 2);
}

TEST(TwoGroup, ComposeMatchesHandComputation) {
  const FiniteTwoGroup c(codiscrete_module(ptr(FiniteGroup::symmetric3())));
  const auto& G = *c.crossed_module().G;
  // the unique morphism p -> q in EG is (p, q p^-1)
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      for (int r = 0; r < 6; ++r) {
        const int pq = c.morphism(p, G.mul(q, G.inv(p)));
        const int qr = c.morphism(q, G.mul(r, G.inv(q)));
        EXPECT_EQ(c.target(pq), q);
        EXPECT_EQ(c.compose(qr, pq), c.morphism(p, G.mul(r, G.inv(p))));
        EXPECT_EQ(c.compose(pq, qr).has_value(), p == r);
      }
}

TEST(StrictKernel, TrivialCases) {
  const FiniteTwoGroup e(codiscrete_module(ptr(FiniteGroup::quaternion8())));
  const FiniteTwoGroup point(skeletal_module(ptr(FiniteGroup::trivial()), ptr(FiniteGroup::trivial())));
  const StrictKernel all = strict_kernel(terminal_hom(e, point));
  EXPECT_EQ(all.objects.size(), 8u);
  EXPECT_EQ(all.morphisms.size(), 64u);
  const StrictKernel none = strict_kernel(identity_hom(e));
  EXPECT_EQ(none.objects, std::vector<int>{0});
  EXPECT_EQ(none.morphisms, std::vector<int>{0});
}

TEST(StrictKernel, RejectsNonHomomorphism) {
  const FiniteTwoGroup c(codiscrete_module(ptr(FiniteGroup::cyclic(3))));
  TwoGroupHom f = identity_hom(c);
  f.on_morphisms[1] = 2;
  EXPECT_THROW(strict_kernel(f), InputError);
  EXPECT_TRUE(two_group_hom_witness(f));
}

TEST(StrictExactness, NormalSubgroupSequences) {
  struct Case {
    FiniteGroup g;
    std::vector<int> n;
    std::string name;
  };
  for (auto& [g, n, name] : std::vector<Case>{{FiniteGroup::symmetric3(), {0, 3, 4}, "A3"},
                                              {FiniteGroup::quaternion8(), {0, 1}, "Z2"},
                                              {FiniteGroup::quaternion8(), {0, 1, 2, 3}, "Z4"},
                                              {FiniteGroup::cyclic(4), {0, 2}, "Z2"},
                                              {FiniteGroup::symmetric3(), {0, 1, 2, 3, 4, 5}, "S3"}}) {
    const auto G = ptr(g);
    const auto seq = normal_subgroup_sequence(G, n, name);
    EXPECT_TRUE(verify_two_group(*seq.middle).ok);
    EXPECT_FALSE(two_group_hom_witness(seq.iota));
    EXPECT_FALSE(two_group_hom_witness(seq.pi));
    const auto r = strict_kernel_exactness(seq.iota, seq.pi);
    EXPECT_TRUE(r.pass()) << g.name() << "/" << name;
    // kernel objects of pi are exactly the image of d
    const StrictKernel k = strict_kernel(seq.pi);
    std::vector<int> im_d = seq.middle->crossed_module().partial;
    std::sort(im_d.begin(), im_d.end());
    EXPECT_EQ(k.objects, im_d);
    EXPECT_EQ(k.morphisms.size(), n.size() * n.size());
  }
}

TEST(StrictExactness, DetectsNonExactPair) {
  const auto s3 = ptr(FiniteGroup::symmetric3());
  const auto seq = normal_subgroup_sequence(s3, {0, 3, 4}, "A3");
  // replace pi with the map to a point: kernel is everything, image of iota is not
  const FiniteTwoGroup point(skeletal_module(ptr(FiniteGroup::trivial()), ptr(FiniteGroup::trivial())));
  const auto r = strict_kernel_exactness(seq.iota, terminal_hom(*seq.middle, point));
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.middle_objects.equal);
  EXPECT_TRUE(r.pi_surjective_objects);
  EXPECT_THROW(strict_kernel_exactness(seq.pi, seq.iota), InputError);
}
