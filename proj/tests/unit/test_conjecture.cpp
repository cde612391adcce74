#include <gtest/gtest.h>

#include <random>

#include "picky/claims.hpp"
#include "picky/conjecture.hpp"
#include "picky/elements.hpp"
#include "picky/errors.hpp"
#include "picky/properties.hpp"
#include "picky/util.hpp"
#include "picky/zoo/basic.hpp"
#include "picky/zoo/named.hpp"
#include "picky/zoo/recipe.hpp"

using namespace picky;
using nlohmann::json;

namespace {

std::size_t class_with(const ClassData& cd, std::uint64_t order, std::uint64_t centralizer) {
  for (std::size_t k = 0; k < cd.size(); ++k)
    if (cd[k].element_order == order && cd[k].centralizer_order == centralizer)
      return k;
  throw std::runtime_error("no such class");
}

std::vector<std::size_t> p_classes(const ClassData& cd, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cd.size(); ++k)
    if (cd[k].element_order > 1 && p_part(cd[k].element_order, p) == cd[k].element_order)
      out.push_back(k);
  return out;
}

} // namespace

TEST(Tags, TrivialCharacter) {
  const ClassData cd(zoo::alternating(5));
  const CharacterTable t = character_table(cd);
  const std::size_t k = class_with(cd, 5, 5);
  const TagOptions opt{Level::plus, local_modulus(cd.exponent(), 5), false};
  const CharTag tag = char_tag(t, t.trivial_row(), k, 5, opt);
  EXPECT_EQ(tag.degree_p_part, (PPart{5, 0}));
  EXPECT_EQ(tag.value_field.conductor, 1u);
  ASSERT_TRUE(tag.value_p_part);
  EXPECT_EQ(*tag.value_p_part, (PPart{5, 0}));
  ASSERT_TRUE(tag.local_field);
  EXPECT_EQ(tag.local_field->local_degree(), 1u);
}

TEST(Tags, AlternatingFiveDegreeThreeAtOrderFive) {
  const ClassData cd(zoo::alternating(5));
  const CharacterTable t = character_table(cd);
  const std::size_t k = class_with(cd, 5, 5);
  const TagOptions opt{Level::plus, local_modulus(cd.exponent(), 5), false};
  std::size_t seen = 0;
  for (std::size_t r = 0; r < t.num_chars(); ++r) {
    if (t.degree(r) != 3)
      continue;
    ++seen;
    const CharTag tag = char_tag(t, r, k, 5, opt);
    EXPECT_EQ(tag.value_field.conductor, 5u);
    EXPECT_EQ(tag.value_field.degree(), 2u);
    EXPECT_EQ(*tag.value_p_part, (PPart{5, 0}));
  }
  EXPECT_EQ(seen, 2u);
}

TEST(Tags, DegreeTwelveAtTwo) {
  const Group g = zoo::load_named("PSL3_3");
  const ClassData cd(g);
  const CharacterTable t = character_table(cd);
  const TagOptions opt{Level::basic, 1, false};
  for (std::size_t r = 0; r < t.num_chars(); ++r)
    if (t.degree(r) == 12)
      EXPECT_EQ(char_tag(t, r, 0, 2, opt).degree_p_part, (PPart{2, 2}));
}

TEST(Tags, BasicLevelOmitsRefinements) {
  const CharacterTable t = character_table(zoo::symmetric(4));
  const CharTag tag = char_tag(t, 0, 0, 2, TagOptions{Level::basic, 1, false});
  EXPECT_FALSE(tag.value_p_part);
  EXPECT_FALSE(tag.local_field);
  EXPECT_FALSE(tag.to_json().contains("value_p_part"));
}

TEST(Restriction, MovedPointsRelabelled) {
  const Group s = Group::generated(6, {Perm::from_cycles(6, {{2, 3, 4}}),
                                       Perm::from_cycles(6, {{2, 4}})});
  const PointRestriction r = restrict_to_moved_points(s);
  EXPECT_EQ(r.points, (std::vector<Point>{2, 3, 4}));
  EXPECT_EQ(r.group.degree(), 3u);
  EXPECT_EQ(r.group.order(), 6u);
  EXPECT_EQ(r.apply(Perm::from_cycles(6, {{2, 3}})), Perm::from_cycles(3, {{0, 1}}));
  EXPECT_THROW(r.apply(Perm::from_cycles(6, {{0, 2}})), PreconditionError);
}

TEST(Conjecture, SubEqualsGroupGivesIdenticalTags) {
  ConjectureChecker c(zoo::symmetric(4), 2);
  const std::size_t k = class_with(c.classes(), 2, 8); // double transpositions
  const ConjectureReport r = c.check(k, Level::plus);
  EXPECT_EQ(r.sub_order, 24u);
  EXPECT_EQ(r.tags_group, r.tags_sub);
  EXPECT_TRUE(r.holds());
  EXPECT_FALSE(r.mismatch_index);
}

TEST(Conjecture, SuzukiEightAllTwoClasses) {
  const Group g = zoo::build_group("Sz(8)").group;
  ConjectureChecker c(g, 2);
  const auto ks = p_classes(c.classes(), 2);
  ASSERT_EQ(ks.size(), 3u);
  for (std::size_t k : ks) {
    const ConjectureReport r = c.check(k, Level::plus);
    EXPECT_TRUE(r.picky);
    EXPECT_EQ(r.sub_order, 448u);
    EXPECT_EQ(r.tags_group.size(), 10u);
    EXPECT_TRUE(r.plus_holds);
    EXPECT_TRUE(r.basic_holds);
  }
}

TEST(Conjecture, PlusImpliesBasicAndFlipInvariance) {
  for (const char* recipe : {"Sym(5)", "Alt(6)", "SL(2,5)@vectors", "GL(2,3)@vectors",
                             "PSL2_8", "Wreath(Sym(3),Cyclic(2))"}) {
    const Group g = zoo::build_group(recipe).group;
    for (std::uint64_t p : prime_divisors(g.order())) {
      ConjectureChecker c(g, p);
      for (std::size_t k : p_classes(c.classes(), p)) {
        const ConjectureReport a = c.check(k, Level::plus);
        const ConjectureReport b = c.check(k, Level::plus, true);
        if (a.plus_holds)
          EXPECT_TRUE(a.basic_holds) << recipe;
        EXPECT_EQ(a.plus_holds, b.plus_holds) << recipe << " p=" << p;
        EXPECT_EQ(a.basic_holds, b.basic_holds) << recipe << " p=" << p;
      }
    }
  }
}

TEST(Conjecture, ConjugateElementGivesSameReport) {
  const Group g = zoo::symmetric(5);
  ConjectureChecker c(g, 2);
  std::mt19937_64 rng(7);
  for (std::size_t k : p_classes(c.classes(), 2)) {
    const Perm y = random_element(g, rng);
    const Perm x = c.classes()[k].rep;
    const ConjectureReport a = check_conjecture(g, 2, x, Level::plus);
    const ConjectureReport b = check_conjecture(g, 2, x.conjugate(y), Level::plus);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  }
}

TEST(Conjecture, TagMultisetsSeparateGroupFromSylow) {
  // Irr^x of A5 and of its Sylow 5-subgroup differ in size at an order-5 x
  const Group g = zoo::alternating(5);
  const ClassData cd(g);
  const std::size_t k = class_with(cd, 5, 5);
  const Group c5 = cyclic_subgroup(cd[k].rep);
  const PointRestriction r = restrict_to_moved_points(c5);
  const ClassData cs(r.group);
  const TagOptions opt{Level::plus, local_modulus(cd.exponent(), 5), false};
  const auto a = tag_multiset(character_table(cd), k, 5, opt);
  const auto b = tag_multiset(character_table(cs), cs.class_of(r.apply(cd[k].rep)), 5, opt);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(b.size(), 5u);
  EXPECT_NE(a, b);
}

TEST(Conjecture, RejectsNonPElements) {
  ConjectureChecker c(zoo::symmetric(4), 3);
  const std::size_t k = class_with(c.classes(), 2, 8);
  EXPECT_THROW(c.check(k, Level::basic), PreconditionError);
  EXPECT_THROW(ConjectureChecker(zoo::symmetric(4), 4), InputError);
}

TEST(McKay, SmallGroups) {
  const McKayCount a5 = mckay_count(zoo::alternating(5), 2);
  EXPECT_EQ(a5.group_count, 4u);
  EXPECT_EQ(a5.normalizer_count, 4u);
  EXPECT_EQ(a5.normalizer_order, 12u);
  const McKayCount s5 = mckay_count(zoo::symmetric(5), 5);
  EXPECT_TRUE(s5.equal());
  EXPECT_EQ(s5.normalizer_order, 20u);
}

TEST(Properties, SmallGroupsPass) {
  for (const char* recipe : {"Sym(4)", "Alt(5)", "Q8", "Dihedral(12)", "SL(2,3)@vectors"}) {
    const Group g = zoo::build_group(recipe).group;
    for (std::uint64_t p : prime_divisors(g.order())) {
      const PropertyReport r = check_subnormaliser_properties(g, p);
      EXPECT_TRUE(r.ok()) << recipe << " p=" << p << " " << r.to_json().dump();
    }
  }
}

TEST(Properties, SymmetricFourTallies) {
  const PropertyReport r = check_subnormaliser_properties(zoo::symmetric(4), 2);
  ASSERT_TRUE(r.find("three_methods_agree"));
  EXPECT_EQ(r.find("three_methods_agree")->checks, 3u);
  EXPECT_EQ(r.find("conjugation_equivariant")->checks, 6u);
  // the Sylow 2-subgroup D8 is not abelian
  EXPECT_FALSE(r.find("abelian_sylow_generation"));
}

TEST(Properties, DirectProductFactorises) {
  const PropertyReport r = check_product_property(zoo::symmetric(3), zoo::cyclic(3), 3);
  ASSERT_TRUE(r.find("direct_product_factorises"));
  // 3-classes: {1, (012)} in S3 and {1, x, x^2} in C3, minus the trivial pair
  EXPECT_EQ(r.find("direct_product_factorises")->checks, 5u);
  EXPECT_TRUE(r.ok());
}

TEST(Claims, RegistryLoads) {
  const auto claims = load_claims(default_claims_dir());
  EXPECT_GE(claims.size(), 20u);
  for (const Claim& c : claims) {
    EXPECT_FALSE(c.statement.empty()) << c.id;
    EXPECT_EQ(Claim::from_json(c.to_json()).to_json(), c.to_json());
  }
  EXPECT_NO_THROW(find_claim(claims, "M12-sub-whole-group"));
  EXPECT_THROW(find_claim(claims, "no-such-claim"), InputError);
}

TEST(Claims, MalformedRejected) {
  json j{{"id", "x"}, {"statement", "s"}, {"kind", "nonsense"}, {"group", "Sym(3)"}, {"p", 3}};
  EXPECT_THROW(Claim::from_json(j), InputError);
  j["kind"] = "subnormaliser";
  j["p"] = 4;
  EXPECT_THROW(Claim::from_json(j), InputError);
  j.erase("p");
  EXPECT_THROW(Claim::from_json(j), InputError);
}

TEST(Claims, PassFailAndBound) {
  json j{{"id", "s4"},
         {"statement", "double transpositions of S4 have the whole group as subnormaliser"},
         {"kind", "subnormaliser"},
         {"group", "Sym(4)"},
         {"p", 2},
         {"select", {{"centralizer_order", 8}}},
         {"expect", {{"sub_order", 24}, {"picky", false}, {"methods_agree", true}}}};
  EXPECT_EQ(reproduce_claim(Claim::from_json(j))["status"], "pass");

  j["expect"]["sub_order"] = 8;
  const json bad = reproduce_claim(Claim::from_json(j));
  EXPECT_EQ(bad["status"], "fail");
  EXPECT_EQ(bad["failures"].size(), 1u);

  j["expect"] = {{"sub_order", 24}, {"typo", 1}};
  EXPECT_EQ(reproduce_claim(Claim::from_json(j))["status"], "fail");

  Bounds tight;
  tight.enumeration = 10;
  j["expect"] = {{"sub_order", 24}};
  EXPECT_EQ(reproduce_claim(Claim::from_json(j), tight)["status"], "skipped (bound)");
}

TEST(Claims, ReproductionIsDeterministic) {
  const auto claims = load_claims(default_claims_dir());
  const Claim c = find_claim(claims, "conjecture-psl2_8-p3");
  const json a = reproduce_claim(c), b = reproduce_claim(c);
  EXPECT_EQ(a["status"], "pass");
  EXPECT_EQ(a.dump(), b.dump());
}
