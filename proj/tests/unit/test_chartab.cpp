#include <gtest/gtest.h>

#include "picky/chartab.hpp"
#include "picky/errors.hpp"
#include "picky/zoo/basic.hpp"

using namespace picky;

namespace {

std::vector<std::uint64_t> degrees(const CharacterTable& t) {
  std::vector<std::uint64_t> d;
  for (std::size_t i = 0; i < t.num_chars(); ++i)
    d.push_back(t.degree(i));
  return d;
}

Cyclotomic golden() { // (1 + sqrt 5) / 2 = -E(5)^2 - E(5)^3
  return -(Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3));
}

} // namespace

TEST(CharTab, CyclicThree) {
  CharacterTable t = character_table(zoo::cyclic(3));
  EXPECT_EQ(degrees(t), (std::vector<std::uint64_t>{1, 1, 1}));
  std::set<std::vector<Cyclotomic>> rows(t.values.begin(), t.values.end());
  const Cyclotomic w = Cyclotomic::zeta(3), w2 = Cyclotomic::zeta(3, 2);
  // classes are 1, x, x^2 or 1, x^2, x: collect value multisets per row
  int with_w = 0;
  for (const auto& row : t.values)
    if ((row[1] == w && row[2] == w2) || (row[1] == w2 && row[2] == w))
      ++with_w;
  EXPECT_EQ(with_w, 2);
  EXPECT_TRUE(verify_table(t).ok());
}

TEST(CharTab, SymmetricThree) {
  CharacterTable t = character_table(zoo::symmetric(3));
  EXPECT_EQ(degrees(t), (std::vector<std::uint64_t>{1, 1, 2}));
  // classes: 1, (12), (123)
  EXPECT_EQ(t.values[2][1], Cyclotomic(0));
  EXPECT_EQ(t.values[2][2], Cyclotomic(-1));
}

TEST(CharTab, AlternatingFive) {
  ClassData cd(zoo::alternating(5));
  CharacterTable t = character_table(cd);
  EXPECT_EQ(degrees(t), (std::vector<std::uint64_t>{1, 3, 3, 4, 5}));
  const Cyclotomic phi = golden(), phibar = Cyclotomic(1) - golden();
  bool found = false;
  for (std::size_t k = 0; k < cd.size(); ++k)
    if (cd[k].element_order == 5)
      for (std::size_t i = 0; i < t.num_chars(); ++i)
        if (t.values[i][k] == phi || t.values[i][k] == phibar)
          found = true;
  EXPECT_TRUE(found);
  for (std::size_t k = 0; k < cd.size(); ++k)
    if (cd[k].element_order == 5)
      EXPECT_EQ(irr_x(t, k).size(), 4u);
}

TEST(CharTab, OrthogonalityRandomGroups) {
  for (const Group& g : {zoo::symmetric(4), zoo::symmetric(5), zoo::dihedral(12),
                         zoo::quaternion8(), zoo::alternating(6),
                         zoo::abelian({2, 4, 3}), zoo::affine_line(7),
                         zoo::wreath(zoo::cyclic(2), zoo::cyclic(3))}) {
    CharacterTable t = character_table(g);
    TableVerification v = verify_table(t);
    EXPECT_TRUE(v.ok()) << v.first_failure;
    EXPECT_EQ(t.num_chars(), t.num_classes());
  }
}

TEST(CharTab, ClassMatrixIdentityAndCounts) {
  ClassData cd(zoo::symmetric(4));
  auto m0 = class_matrix(cd, 0);
  for (std::size_t j = 0; j < cd.size(); ++j)
    for (std::size_t k = 0; k < cd.size(); ++k)
      EXPECT_EQ(m0[j][k], j == k ? 1u : 0u);
  for (std::size_t i = 0; i < cd.size(); ++i) {
    auto m = class_matrix(cd, i);
    // column sums: every a in C_i contributes once per k
    for (std::size_t k = 0; k < cd.size(); ++k) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < cd.size(); ++j)
        s += m[j][k];
      EXPECT_EQ(s, cd[i].size);
    }
  }
}

TEST(CharTab, ClassMatrixSymmetricThreeTranspositions) {
  ClassData cd(zoo::symmetric(3));
  ASSERT_EQ(cd[1].element_order, 2u);
  const auto m = class_matrix(cd, 1);
  // each of the 3 transpositions times itself gives the identity
  EXPECT_EQ(m[1][0], 3u);
  EXPECT_EQ(m[0][0], 0u);
  EXPECT_EQ(m[2][0], 0u);
}

TEST(CharTab, JsonRoundTripBitExact) {
  CharacterTable t = character_table(zoo::alternating(5), {}, "A5 test");
  const std::string a = t.to_json().dump();
  CharacterTable u = CharacterTable::from_json(nlohmann::json::parse(a));
  EXPECT_EQ(u.to_json().dump(), a);
  EXPECT_TRUE(verify_table(u).ok());
}

TEST(CharTab, PerturbedTableFailsColumnOrthogonality) {
  CharacterTable t = character_table(zoo::alternating(5));
  t.values[3][2] = t.values[3][2] + Cyclotomic(1);
  TableVerification v = verify_table(t);
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.column_orthogonality_ok);
}

TEST(CharTab, Bounds) {
  Bounds b;
  b.class_count = 3;
  EXPECT_THROW(character_table(zoo::symmetric(4), b), BoundExceeded);
  b = Bounds{};
  b.character_table_order = 10;
  EXPECT_THROW(character_table(zoo::symmetric(4), b), BoundExceeded);
  EXPECT_THROW(dixon_prime(4, 100, 20), BoundExceeded);
  EXPECT_EQ(dixon_prime(6, 24, 1000), 13u);
}

TEST(CharTab, SymmetricFourFrozen) {
  ClassData cd(zoo::symmetric(4));
  ASSERT_EQ(cd.size(), 5u);
  std::vector<std::uint64_t> sizes;
  for (const auto& c : cd.classes())
    sizes.push_back(c.size);
  ASSERT_EQ(sizes, (std::vector<std::uint64_t>{1, 3, 6, 8, 6}));
  CharacterTable t = character_table(cd);
  auto row = [](std::initializer_list<long> v) {
    std::vector<Cyclotomic> r;
    for (long x : v)
      r.emplace_back(x);
    return r;
  };
  std::set<std::vector<Cyclotomic>> expect{row({1, 1, 1, 1, 1}), row({1, 1, -1, 1, -1}),
                                           row({2, 2, 0, -1, 0}), row({3, -1, 1, 0, -1}),
                                           row({3, -1, -1, 0, 1})};
  EXPECT_EQ(std::set<std::vector<Cyclotomic>>(t.values.begin(), t.values.end()), expect);
  EXPECT_EQ(degrees(t), (std::vector<std::uint64_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(t.values[t.trivial_row()], row({1, 1, 1, 1, 1}));
}

TEST(CharTab, DihedralAndQuaternionShareValues) {
  CharacterTable d = character_table(zoo::dihedral(8));
  CharacterTable q = character_table(zoo::quaternion8());
  std::set<std::vector<Cyclotomic>> a(d.values.begin(), d.values.end());
  std::set<std::vector<Cyclotomic>> b(q.values.begin(), q.values.end());
  EXPECT_EQ(a, b);
  EXPECT_NE(d.power_maps.at(2), q.power_maps.at(2));
}

TEST(CharTab, LargerGroupsVerify) {
  for (const Group& g : {zoo::symmetric(7), zoo::alternating(8)}) {
    CharacterTable t = character_table(g);
    EXPECT_TRUE(verify_table(t).ok());
  }
}
