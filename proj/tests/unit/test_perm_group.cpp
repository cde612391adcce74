#include <gtest/gtest.h>
#include <set>

#include "picky/backtrack.hpp"
#include "picky/elements.hpp"
#include "picky/errors.hpp"
#include "picky/group.hpp"

using namespace picky;

namespace {

Group symmetric(std::size_t n) {
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Point>(i);
  return Group::generated(n, {Perm::from_cycles(n, {cyc}), Perm::from_cycles(n, {{0, 1}})});
}

} // namespace

TEST(Perm, RightActionProduct) {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  // 0 -a-> 1 -b-> 2
  EXPECT_EQ((a * b)[0], 2u);
  EXPECT_EQ((a * b).order(), 3u);
  EXPECT_EQ(a.conjugate(b), b.inverse() * a * b);
}

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), InputError);
  EXPECT_THROW(group_from_generators({{0, 1, 1}}, 3), InputError);
}

TEST(Perm, PParts) {
  Perm g = Perm::from_cycles(5, {{0, 1, 2}, {3, 4}});
  auto pp = p_parts(g, 2);
  EXPECT_EQ(pp.p_part.order(), 2u);
  EXPECT_EQ(pp.p_prime_part.order(), 3u);
  EXPECT_EQ(pp.p_part * pp.p_prime_part, g);
}

TEST(Group, SymmetricOrders) {
  for (std::size_t n = 2; n <= 9; ++n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i)
      f *= i;
    EXPECT_EQ(symmetric(n).order(), f) << n;
  }
}

TEST(Group, IndexerIsBijective) {
  Group g = symmetric(5);
  ElementIndexer ix(g);
  std::set<Perm> seen;
  for (std::uint64_t i = 0; i < ix.size(); ++i) {
    Perm e = ix.element(i);
    EXPECT_EQ(ix.index_of(e), i);
    seen.insert(e);
  }
  EXPECT_EQ(seen.size(), 120u);
  EXPECT_EQ(ix.index_of(Perm::from_cycles(6, {{4, 5}})), ElementIndexer::npos);
}

TEST(Backtrack, S4Examples) {
  Group s4 = symmetric(4);
  Perm x = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(centralizer(s4, x).order(), 8u);
  Group c4 = cyclic_subgroup(Perm::from_cycles(4, {{0, 1, 2, 3}}));
  EXPECT_EQ(normalizer(s4, c4).order(), 8u);
  Group p3 = cyclic_subgroup(Perm::from_cycles(4, {{0, 1, 2}}));
  EXPECT_EQ(normalizer(s4, p3).order(), 6u);
  EXPECT_EQ(center(s4).order(), 1u);
}

TEST(Backtrack, AgreesWithExhaustiveOnS6) {
  Group s6 = symmetric(6);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Perm x = random_element(s6, rng);
    EXPECT_TRUE(same_group(centralizer_backtrack(s6, x), centralizer_exhaustive(s6, x, 1000)));
    Perm y = random_element(s6, rng);
    Group h = Group::generated(6, {x, y.pow(2)});
    EXPECT_TRUE(same_group(normalizer_backtrack(s6, h), normalizer_exhaustive(s6, h, 1000)));
    auto c = conjugating_element(s6, x, x.conjugate(y));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(x.conjugate(*c), x.conjugate(y));
  }
}

TEST(Backtrack, Intersection) {
  Group s5 = symmetric(5);
  Group a = Group::generated(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{1, 4}, {2, 3}})});
  Group b = Group::generated(5, {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{2, 3, 4}}), Perm::from_cycles(5, {{2, 3}})});
  Group i = intersection(a, b);
  auto oracle = exhaustive_subgroup(s5, 200, [&](const Perm& t) { return a.contains(t) && b.contains(t); });
  EXPECT_TRUE(same_group(i, oracle));
}
