#include <gtest/gtest.h>

#include "pcl/errors.hpp"
#include "pcl/structure.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace pcl {
namespace {

using testing::gen;
using testing::make;

oracle::Mask mask_of(const Subgroup& h) {
  oracle::Mask m = 0;
  h.members().for_each([&](Element x) { m |= oracle::bit(x); });
  return m;
}

TEST(SubgroupGenerated, Examples) {
  auto d8 = make("D(8)");
  EXPECT_EQ(gen(*d8, {}).order(), 1u);
  EXPECT_EQ(gen(*d8, {testing::dihedral_elem(4, 2, 0)}).order(), 2u);
  EXPECT_EQ(gen(*d8, {testing::dihedral_elem(4, 1, 0), testing::dihedral_elem(4, 0, 1)}).order(), 8u);
}

TEST(AllSubgroups, CountsMatchSubsetOracle) {
  for (auto [spec, expected] : {std::pair{"Q8", 6}, {"D(8)", 10}, {"C(2)xC(2)", 5}, {"C(8)", 4}, {"D(6)", 6},
                                {"EA(2,3)", 16}, {"D(12)", 16}, {"C(4)xC(4)", 15}, {"M2(1,2,1)", 23}}) {
    auto g = make(spec);
    const auto subs = all_subgroups(*g);
    EXPECT_EQ(static_cast<int>(subs.size()), expected) << spec;
    auto brute = oracle::subgroups_by_subsets(*g);
    std::vector<oracle::Mask> ours;
    for (const auto& h : subs) ours.push_back(mask_of(h));
    std::sort(brute.begin(), brute.end());
    std::sort(ours.begin(), ours.end());
    EXPECT_EQ(ours, brute) << spec;
  }
}

TEST(AllSubgroups, CanonicalOrderAndClosure) {
  auto g = make("perm:(1,2,3),(1,2)(3,4)");
  const auto subs = all_subgroups(*g);
  ASSERT_EQ(subs.size(), 10u);
  for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_TRUE(canonical_less(subs[i - 1], subs[i]));
  for (const auto& h : subs) {
    EXPECT_EQ(g->order() % h.order(), 0u);
    const std::vector<Element> gens(h.generators().begin(), h.generators().end());
    EXPECT_EQ(subgroup_generated(*g, gens), h);
  }
}

TEST(Frattini, Examples) {
  auto c4 = make("C(4)");
  EXPECT_EQ(frattini(*c4), gen(*c4, {2}));
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(frattini(*make("EA(2," + std::to_string(k) + ")")).is_trivial());
  auto q8 = make("Q8");
  const Subgroup phi = frattini(*q8);
  EXPECT_EQ(phi.order(), 2u);
  Element z = 0;
  for (Element x = 1; x < 8; ++x)
    if (q8->mul(x, x) == 0) z = x;
  EXPECT_TRUE(phi.contains(z));
}

TEST(Frattini, MatchesMaximalSubgroupOracle) {
  for (const char* spec : {"D(8)", "Q8", "C(4)xC(2)", "D(12)", "M2(1,2,1)", "C(8)xC(2)", "perm:(1,2,3),(1,2)(3,4)"}) {
    auto g = make(spec);
    const auto all = oracle::subgroups_by_subsets(*g);
    EXPECT_EQ(mask_of(frattini(*g)), oracle::frattini_mask(all, (oracle::Mask{1} << g->order()) - 1)) << spec;
  }
}

TEST(DerivedAndNormalizer, Examples) {
  EXPECT_TRUE(derived_subgroup(*make("C(4)xC(2)")).is_trivial());
  for (auto [n2, m2] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {
    auto g = nonmetacyclic_m2(n2, m2);
    const Subgroup d = derived_subgroup(*g);
    EXPECT_EQ(d.order(), 2u);
    EXPECT_TRUE(d.contains(testing::nonmetacyclic_elem(n2, m2, 0, 0, 1)));
  }
  auto d8 = make("D(8)");
  const Subgroup b = gen(*d8, {testing::dihedral_elem(4, 0, 1)});
  const Subgroup n = normalizer(*d8, b);
  EXPECT_EQ(n.order(), 4u);
  EXPECT_EQ(n, gen(*d8, {testing::dihedral_elem(4, 2, 0), testing::dihedral_elem(4, 0, 1)}));
}

TEST(CenterAndCentralizer, Dihedral) {
  auto d8 = make("D(8)");
  EXPECT_EQ(center(*d8), gen(*d8, {testing::dihedral_elem(4, 2, 0)}));
  EXPECT_EQ(center(*make("D(10)")).order(), 1u);
  EXPECT_EQ(center(*make("Q8")).order(), 2u);
  ElementSet just_a(8);
  just_a.insert(testing::dihedral_elem(4, 1, 0));
  EXPECT_EQ(centralizer(*d8, just_a).order(), 4u);
}

TEST(Sylow, Examples) {
  auto s3 = make("perm:(1,2,3),(1,2)");
  EXPECT_EQ(sylow(*s3, 2).order(), 2u);
  auto a4 = make("perm:(1,2,3),(1,2)(3,4)");
  const Subgroup v4 = sylow(*a4, 2);
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_TRUE(is_normal(whole_group(*a4), v4));
  EXPECT_TRUE(sylow(*a4, 5).is_trivial());
  EXPECT_EQ(sylow(*a4, 3).order(), 3u);
  EXPECT_EQ(sylow(*make("perm:(1,2,3,4,5),(1,2,3)"), 2).order(), 4u);
}

TEST(SylowContaining, Examples) {
  auto a4 = make("perm:(1,2,3),(1,2)(3,4)");
  EXPECT_EQ(sylow_containing(*a4, 2, trivial_subgroup(*a4)), sylow(*a4, 2));
  for (Element x = 1; x < a4->order(); ++x) {
    if (a4->element_order(x) != 2) continue;
    EXPECT_EQ(sylow_containing(*a4, 2, gen(*a4, {x})), sylow(*a4, 2));
  }
  auto d8 = make("D(8)");
  EXPECT_TRUE(sylow_containing(*d8, 2, gen(*d8, {testing::dihedral_elem(4, 0, 1)})).is_whole());

  auto s3 = make("perm:(1,2,3),(1,2)");
  Element t = 0;
  for (Element x = 1; x < 6; ++x)
    if (s3->element_order(x) == 3) t = x;
  EXPECT_THROW(sylow_containing(*s3, 2, gen(*s3, {t})), PreconditionError);
}

TEST(Omega, Examples) {
  for (auto [n1, m1] : {std::pair{2, 2}, {3, 1}, {2, 3}, {4, 2}}) {
    const Subgroup o = omega1(*metacyclic_m2(n1, m1));
    EXPECT_EQ(o.order(), 4u);
    EXPECT_EQ(min_generators(o), 2);
  }
  for (auto [n2, m2] : {std::pair{1, 2}, {2, 2}, {1, 4}, {2, 3}}) {
    auto g = nonmetacyclic_m2(n2, m2);
    const Subgroup o = omega1(*g);
    EXPECT_EQ(o.order(), 8u);
    EXPECT_EQ(min_generators(o), 3);
    EXPECT_FALSE(is_square(*g, testing::nonmetacyclic_elem(n2, m2, 0, 0, 1)));
  }
}

TEST(Squares, AbelianSquaresAreFrattini) {
  for (const char* spec : {"C(4)xC(2)", "C(8)xC(4)", "C(4)xC(4)xC(2)", "EA(2,3)", "C(16)"}) {
    auto g = make(spec);
    EXPECT_EQ(squares_set(*g), frattini(*g).members()) << spec;
  }
}

TEST(MinGenerators, Examples) {
  EXPECT_EQ(min_generators(whole_group(*make("C(8)"))), 1);
  EXPECT_EQ(min_generators(whole_group(*make("Q8"))), 2);
  EXPECT_EQ(min_generators(whole_group(*make("EA(2,3)"))), 3);
  EXPECT_EQ(min_generators(whole_group(*make("C(1)"))), 0);
  EXPECT_EQ(min_generators(whole_group(*make("perm:(1,2,3),(1,2)"))), 2);
  EXPECT_EQ(min_generators_by_search(whole_group(*make("C(4)xC(2)xC(2)"))), 3);
}

TEST(MinimalNonabelian, Examples) {
  EXPECT_TRUE(is_minimal_nonabelian(*make("Q8")));
  EXPECT_TRUE(is_minimal_nonabelian(*make("D(8)")));
  EXPECT_FALSE(is_minimal_nonabelian(*make("C(4)xC(2)")));
  EXPECT_FALSE(is_minimal_nonabelian(*make("D(16)")));
  EXPECT_TRUE(is_minimal_nonabelian(*make("M2(2,2,1)")));
}

TEST(Recognition, Examples) {
  auto d8 = make("D(8)");
  const auto r = recognize_a1_family(*d8);
  EXPECT_EQ(r.tag, FamilyTag::Metacyclic);
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.m, 1);
  EXPECT_TRUE(verify_recognition(*d8, r));

  auto q8 = make("Q8");
  EXPECT_EQ(recognize_a1_family(*q8).tag, FamilyTag::Q8);
  EXPECT_TRUE(verify_recognition(*q8, recognize_a1_family(*q8)));

  auto g = make("M2(2,2,1)");
  const auto rn = recognize_a1_family(*g);
  EXPECT_EQ(rn.tag, FamilyTag::Nonmetacyclic);
  EXPECT_EQ(rn.n, 2);
  EXPECT_EQ(rn.m, 2);

  EXPECT_EQ(recognize_a1_family(*make("C(4)xC(2)")).tag, FamilyTag::Abelian);
  EXPECT_EQ(recognize_a1_family(*make("D(16)")).tag, FamilyTag::NotA1OrA0);
  EXPECT_THROW(recognize_a1_family(*make("perm:(1,2,3),(1,2)")), PreconditionError);
}

TEST(Recognition, RecoversConstructionParameters) {
  for (int n1 = 2; n1 <= 5; ++n1)
    for (int m1 = 1; n1 + m1 <= 6; ++m1) {
      auto g = metacyclic_m2(n1, m1);
      const auto r = recognize_a1_family(*g);
      EXPECT_EQ(r.tag, FamilyTag::Metacyclic) << n1 << "," << m1;
      EXPECT_EQ(r.n, n1);
      EXPECT_EQ(r.m, m1);
      EXPECT_TRUE(verify_recognition(*g, r));
    }
  for (auto [n2, m2] : {std::pair{1, 2}, {2, 1}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}}) {
    auto g = nonmetacyclic_m2(n2, m2);
    const auto r = recognize_a1_family(*g);
    EXPECT_EQ(r.tag, FamilyTag::Nonmetacyclic);
    EXPECT_EQ(r.n, std::min(n2, m2));
    EXPECT_EQ(r.m, std::max(n2, m2));
    EXPECT_TRUE(verify_recognition(*g, r));
  }
}

TEST(Recognition, Dihedral) {
  for (int order = 6; order <= 24; order += 2) {
    auto g = dihedral(order);
    const auto w = recognize_dihedral(*g);
    ASSERT_TRUE(w.has_value()) << order;
    EXPECT_EQ(g->element_order(w->a), static_cast<std::uint32_t>(order / 2));
    EXPECT_EQ(g->conjugate(w->a, w->b), g->inv(w->a));
  }
  EXPECT_FALSE(recognize_dihedral(*make("Q8")).has_value());
  EXPECT_FALSE(recognize_dihedral(*make("C(4)xC(2)")).has_value());
  EXPECT_FALSE(recognize_dihedral(*make("perm:(1,2,3),(1,2)(3,4)")).has_value());
}

TEST(InducedGroup, RoundTrip) {
  auto g = make("perm:(1,2,3,4,5),(1,2,3)");
  const Subgroup p = sylow(*g, 2);
  const InducedGroup ind = induced_group(p);
  EXPECT_EQ(ind.group->order(), 4u);
  EXPECT_TRUE(ind.group->is_abelian());
  for (const Subgroup& k : all_subgroups(p)) EXPECT_EQ(ind.lift(ind.restrict(k), g), k);
}

}  // namespace
}  // namespace pcl
