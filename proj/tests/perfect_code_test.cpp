#include <gtest/gtest.h>

#include "pcl/errors.hpp"
#include "pcl/perfect_code.hpp"
#include "pcl/structure.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace pcl {
namespace {

using testing::gen;
using testing::make;

Element rot(int n, int i) { return testing::dihedral_elem(n, i, 0); }
Element refl(int n, int i) { return testing::dihedral_elem(n, i, 1); }

TEST(Criterion3, Examples) {
  auto c4 = make("C(4)");
  const Verdict v = criterion3(*c4, gen(*c4, {2}));
  EXPECT_FALSE(v.is_code);
  ASSERT_TRUE(std::holds_alternative<ViolatingCoset>(v.evidence));
  EXPECT_EQ(std::get<ViolatingCoset>(v.evidence).x % 2, 1);

  for (const char* spec : {"C(4)", "Q8", "D(8)", "perm:(1,2,3,4,5),(1,2,3)"}) {
    auto g = make(spec);
    EXPECT_TRUE(criterion3(*g, trivial_subgroup(*g)).is_code);
    EXPECT_TRUE(criterion3(*g, whole_group(*g)).is_code);
  }
  auto d8 = make("D(8)");
  EXPECT_TRUE(criterion3(*d8, gen(*d8, {refl(4, 0)})).is_code);
}

TEST(Criterion4, Examples) {
  auto c4 = make("C(4)");
  EXPECT_FALSE(criterion4(*c4, gen(*c4, {2})).is_code);
  auto q8 = make("Q8");
  for (Element x = 1; x < 8; ++x)
    if (q8->element_order(x) == 4) EXPECT_FALSE(criterion4(*q8, gen(*q8, {x})).is_code);
  auto v4 = make("EA(2,2)");
  for (const auto& h : all_subgroups(*v4)) EXPECT_TRUE(criterion4(*v4, h).is_code);
}

TEST(Transversal, Examples) {
  auto d8 = make("D(8)");
  const auto whole = find_inverse_closed_transversal(*d8, whole_group(*d8));
  ASSERT_TRUE(whole.has_value());
  EXPECT_EQ(whole->reps, std::vector<Element>{0});

  auto c4 = make("C(4)");
  EXPECT_FALSE(find_inverse_closed_transversal(*c4, gen(*c4, {2})).has_value());

  const Subgroup b = gen(*d8, {refl(4, 0)});
  const auto t = find_inverse_closed_transversal(*d8, b);
  ASSERT_TRUE(t.has_value());
  EXPECT_FALSE(check_transversal(*t).has_value());
  EXPECT_EQ(t->reps.size(), 4u);
}

TEST(Transversal, CheckerRejectsBadSets) {
  auto d8 = make("D(8)");
  const Subgroup b = gen(*d8, {refl(4, 0)});
  // a and a^-1 = a^3 together, but a^2 missing: two cosets unrepresented.
  EXPECT_TRUE(check_transversal({d8, b, {0, rot(4, 1), rot(4, 3), refl(4, 0)}}).has_value());
  // Not inverse-closed: a without a^3.
  EXPECT_TRUE(check_transversal({d8, b, {0, rot(4, 1), rot(4, 2), refl(4, 3)}}).has_value());
  EXPECT_FALSE(check_transversal({d8, b, {0, rot(4, 1), rot(4, 2), rot(4, 3)}}).has_value());
}

TEST(ConnectionSet, Examples) {
  auto d8 = make("D(8)");
  const Subgroup whole = whole_group(*d8);
  const auto s_empty = connection_set_from_transversal(*d8, whole, {d8, whole, {0}});
  EXPECT_TRUE(s_empty.members.empty());
  EXPECT_TRUE(verify_perfect_code_in_cayley(*d8, s_empty, whole));

  const Subgroup one = trivial_subgroup(*d8);
  std::vector<Element> everything;
  for (Element x = 0; x < 8; ++x) everything.push_back(x);
  const auto s_all = connection_set_from_transversal(*d8, one, {d8, one, everything});
  EXPECT_EQ(s_all.members.count(), 7u);
  EXPECT_TRUE(verify_perfect_code_in_cayley(*d8, s_all, one));

  const Subgroup b = gen(*d8, {refl(4, 0)});
  const auto s = connection_set_from_transversal(*d8, b, {d8, b, {0, rot(4, 1), rot(4, 2), rot(4, 3)}});
  EXPECT_EQ(s.members.to_vector(), (std::vector<Element>{rot(4, 1), rot(4, 2), rot(4, 3)}));
  EXPECT_TRUE(verify_perfect_code_in_cayley(*d8, s, b));
}

TEST(ConnectionSet, RejectsMalformedInput) {
  auto d8 = make("D(8)");
  const Subgroup b = gen(*d8, {refl(4, 0)});
  EXPECT_THROW(connection_set_from_transversal(*d8, b, {d8, b, {0, rot(4, 1)}}), PreconditionError);
  ConnectionSet bad{d8, ElementSet(8)};
  bad.members.insert(rot(4, 1));
  EXPECT_THROW(verify_perfect_code_in_cayley(*d8, bad, b), PreconditionError);
  bad.members.insert(0);
  EXPECT_THROW(verify_perfect_code_in_cayley(*d8, bad, b), PreconditionError);
}

TEST(ConnectionSet, CyclicFourHasNoWitness) {
  auto c4 = make("C(4)");
  const Subgroup h = gen(*c4, {2});
  // Every inverse-closed identity-free S: {}, {2}, {1,3}, {1,2,3}.
  for (std::vector<Element> s : {std::vector<Element>{}, {2}, {1, 3}, {1, 2, 3}}) {
    ConnectionSet cs{c4, ElementSet(4)};
    for (Element x : s) cs.members.insert(x);
    EXPECT_FALSE(verify_perfect_code_in_cayley(*c4, cs, h));
  }
}

TEST(CayleyDefinition, MatchesExhaustiveSearchOnSmallGroups) {
  for (const char* spec : {"C(4)", "C(8)", "Q8", "D(8)", "C(4)xC(2)", "D(6)", "D(12)"}) {
    auto g = make(spec);
    for (const auto& h : all_subgroups(*g)) {
      oracle::Mask m = 0;
      h.members().for_each([&](Element x) { m |= oracle::bit(x); });
      EXPECT_EQ(cayley_definition(*g, h).is_code, oracle::exists_connection_set(*g, m)) << spec;
    }
  }
}

TEST(Zhang, Examples) {
  auto s3 = make("perm:(1,2,3),(1,2)");
  for (Element x = 1; x < 6; ++x) {
    if (s3->element_order(x) != 2) continue;
    const Subgroup h = gen(*s3, {x});
    const auto r = zhang_reduce(*s3, h);
    EXPECT_EQ(r.q, h);
    EXPECT_EQ(r.p, h);
    EXPECT_TRUE(reduced_is_code(r));
  }

  auto c73 = make("SD(C(7);C(3);2)");
  for (const auto& h : all_subgroups(*c73)) {
    const auto r = zhang_reduce(*c73, h);
    EXPECT_TRUE(r.q.is_trivial());
    EXPECT_TRUE(reduced_is_code(r));
  }

  auto f20 = make("SD(C(5);C(4);2)");
  Element x = 0;
  for (Element y = 1; y < f20->order(); ++y)
    if (f20->element_order(y) == 4) {
      x = y;
      break;
    }
  const Subgroup h = gen(*f20, {f20->mul(x, x)});
  const auto r = zhang_reduce(*f20, h);
  EXPECT_EQ(r.q.order(), 2u);
  EXPECT_EQ(r.p.order(), 4u);
  EXPECT_TRUE(is_cyclic(r.p));
  EXPECT_EQ(frattini(r.p), r.q);
  EXPECT_FALSE(reduced_is_code(r));
  EXPECT_FALSE(criterion3(*f20, h).is_code);
}

TEST(CodePerfect, Examples) {
  EXPECT_TRUE(is_code_perfect(*make("perm:(1,2,3),(1,2)")));
  EXPECT_FALSE(is_code_perfect(*make("C(4)")));
  EXPECT_TRUE(is_code_perfect(*make("SD(C(7);C(3);2)")));
  EXPECT_TRUE(is_code_perfect(*make("EA(2,4)")));
  EXPECT_FALSE(is_code_perfect(*make("Q8")));
}

TEST(Preconditions, ForeignSubgroupIsRejected) {
  auto a = make("C(4)");
  auto b = make("C(4)");
  const Subgroup h = gen(*b, {2});
  EXPECT_THROW(criterion3(*a, h), PreconditionError);
  EXPECT_THROW(find_inverse_closed_transversal(*a, h), PreconditionError);
}

}  // namespace
}  // namespace pcl
