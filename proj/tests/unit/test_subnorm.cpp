#include <gtest/gtest.h>
#include <set>

#include "picky/backtrack.hpp"
#include "picky/classes.hpp"
#include "picky/errors.hpp"
#include "picky/quotient.hpp"
#include "picky/structure.hpp"
#include "picky/subnorm.hpp"
#include "picky/util.hpp"
#include "picky/zoo/basic.hpp"

using namespace picky;
using namespace picky::zoo;

namespace {
Perm pc(std::size_t n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }
Group cyc(const Perm& x) { return cyclic_subgroup(x); }
} // namespace

TEST(Classes, S4) {
  ClassData cd(symmetric(4));
  ASSERT_EQ(cd.size(), 5u);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : cd.classes())
    sizes.insert(c.size);
  EXPECT_EQ(sizes, (std::multiset<std::uint64_t>{1, 6, 3, 8, 6}));
  EXPECT_EQ(cd.exponent(), 12u);
  for (const auto& c : cd.classes())
    EXPECT_EQ(c.size * c.centralizer_order, 24u);
  // 4-cycles square into the class of double transpositions
  std::size_t k4 = 4;
  EXPECT_EQ(cd[k4].element_order, 4u);
  EXPECT_EQ(cd[cd.power_map(2)[k4]].element_order, 2u);
  EXPECT_EQ(cd[cd.power_map(2)[k4]].size, 3u);
}

TEST(Classes, AbelianAllSingletons) {
  ClassData cd(abelian({2, 3, 4}));
  EXPECT_EQ(cd.size(), 24u);
  for (const auto& c : cd.classes())
    EXPECT_EQ(c.size, 1u);
}

TEST(Structure, SubnormalExamples) {
  Group s4 = symmetric(4);
  EXPECT_TRUE(is_subnormal(s4, s4));
  EXPECT_TRUE(is_subnormal(s4, cyc(pc(4, {{0, 1}, {2, 3}}))));
  EXPECT_FALSE(is_subnormal(s4, cyc(pc(4, {{0, 1}}))));
  EXPECT_THROW(is_subnormal(alternating(4), cyc(pc(4, {{0, 1}}))), PreconditionError);
}

TEST(Structure, SubnormalAgreesWithSeriesSearch) {
  for (const Group& g : {symmetric(4), dihedral(8), quaternion8(), alternating(4),
                         wreath(cyclic(2), cyclic(3)), dihedral(12)}) {
    for (const Group& h : all_subgroups(g, 200))
      EXPECT_EQ(is_subnormal(g, h), is_subnormal_search(g, h)) << g.order() << " " << h.order();
  }
}

TEST(Structure, SubgroupCounts) {
  EXPECT_EQ(all_subgroups(symmetric(4), 200).size(), 30u);
  EXPECT_EQ(all_subgroups(quaternion8(), 200).size(), 6u);
  EXPECT_EQ(all_subgroups(alternating(4), 200).size(), 10u);
}

TEST(Sylow, Orders) {
  EXPECT_EQ(sylow(symmetric(4), 2).order(), 8u);
  EXPECT_EQ(sylow(symmetric(4), 5).order(), 1u);
  EXPECT_EQ(sylow(symmetric(7), 2).order(), 16u);
  EXPECT_EQ(sylow(symmetric(7), 3).order(), 9u);
  EXPECT_EQ(sylow(alternating(6), 3).order(), 9u);
  EXPECT_EQ(o_p(symmetric(4), 2).order(), 4u);
  EXPECT_EQ(o_p_prime_residual(symmetric(4), 3).order(), 12u);
}

TEST(Sylow, ContainingCounts) {
  Group s4 = symmetric(4);
  EXPECT_EQ(sylows_containing(s4, 2, pc(4, {{0, 1}, {2, 3}})).count_containing_x, 3u);
  EXPECT_EQ(sylows_containing(s4, 2, pc(4, {{0, 1}})).count_containing_x, 1u);
  Group c5 = cyclic(5);
  EXPECT_EQ(sylows_containing(c5, 5, c5.generators()[0]).count_containing_x, 1u);
  EXPECT_THROW(sylows_containing(s4, 2, pc(4, {{0, 1, 2}})), PreconditionError);
}

TEST(Subnorm, S4Examples) {
  Group s4 = symmetric(4);
  Perm v = pc(4, {{0, 1}, {2, 3}}), t = pc(4, {{0, 1}}), c3 = pc(4, {{0, 1, 2}});
  EXPECT_EQ(subnormaliser(s4, 2, v).subgroup.order(), 24u);
  EXPECT_EQ(subnormaliser_fusion(s4, 2, v).subgroup.order(), 24u);
  EXPECT_EQ(subnormaliser_fusion(s4, 2, t).subgroup.order(), 8u);
  EXPECT_EQ(subnormaliser_bruteforce(s4, 3, c3).subgroup.order(), 6u);
  EXPECT_EQ(subnormaliser(s4, 2, Perm::identity(4)).subgroup.order(), 24u);
  EXPECT_TRUE(is_picky(s4, 2, t));
  EXPECT_FALSE(is_picky(s4, 2, v));
  EXPECT_FALSE(almost_normal(s4, 2));
  EXPECT_TRUE(almost_normal(quaternion8(), 2));
}

TEST(Subnorm, FusionConjugatorSearchMatchesScan) {
  Group s6 = symmetric(6);
  Bounds small;
  small.fusion_scan = 10;
  ClassData cd(s6);
  for (const auto& c : cd.classes())
    for (std::uint64_t p : {2u, 3u}) {
      if (c.element_order == 1 || p_part(c.element_order, p) != c.element_order)
        continue;
      EXPECT_TRUE(same_group(subnormaliser_fusion(s6, p, c.rep, small).subgroup,
                             subnormaliser_fusion(s6, p, c.rep).subgroup));
    }
}

TEST(Subnorm, PickyClassesQ8AllPicky) {
  PickyReport r = picky_classes(quaternion8(), 2);
  EXPECT_EQ(r.rows.size(), 4u);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.picky);
    EXPECT_TRUE(row.methods_agree);
  }
}

TEST(Quotient, Examples) {
  Group s4 = symmetric(4);
  Group v4 = Group::generated(4, {pc(4, {{0, 1}, {2, 3}}), pc(4, {{0, 2}, {1, 3}})});
  QuotientAction q(s4, v4);
  EXPECT_EQ(q.image().order(), 6u);
  QuotientAction id(s4, Group::trivial(4));
  EXPECT_EQ(id.image().order(), 24u);
  for (const Perm& s : q.image().generators())
    EXPECT_EQ(q.project(q.lift(s)), s);
  EXPECT_THROW(QuotientAction(s4, cyc(pc(4, {{0, 1}}))), PreconditionError);
  // D8 mod its centre needs the coset action (centre has no useful orbits)
  Group d8 = dihedral(8);
  QuotientAction qc(d8, center(d8));
  EXPECT_EQ(qc.image().order(), 4u);
  for (const Perm& s : qc.image().generators())
    EXPECT_EQ(qc.project(qc.lift(s)), s);
}
