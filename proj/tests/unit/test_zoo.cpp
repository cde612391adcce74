#include <gtest/gtest.h>

#include "picky/backtrack.hpp"
#include "picky/errors.hpp"
#include "picky/sylow.hpp"
#include "picky/util.hpp"
#include "picky/zoo/construct.hpp"
#include "picky/zoo/field.hpp"

using namespace picky;
using namespace picky::zoo;

TEST(Field, TableIsIrreducibleAndCyclic) {
  for (const auto& e : field_table()) {
    FiniteField f(e.q);
    EXPECT_EQ(f.order(), e.q);
    std::uint64_t ord = 1;
    for (Elt x = f.generator(); x != 1; x = f.mul(x, f.generator()))
      ++ord;
    EXPECT_EQ(ord, e.q - 1);
  }
  EXPECT_THROW(FiniteField(6), InputError);
  EXPECT_THROW(FiniteField(125), InputError);
}

TEST(Field, Examples) {
  FiniteField f2(2);
  EXPECT_EQ(f2.degree(), 1u);
  FiniteField f9(9);
  EXPECT_EQ(f9.degree(), 2u);
  EXPECT_EQ(f9.pow(f9.generator(), 8), 1u);
  EXPECT_NE(f9.pow(f9.generator(), 4), 1u);
  FiniteField f8(8);
  EXPECT_EQ(f8.modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(Field, AxiomsOnSmallFields) {
  for (std::uint64_t q : {4, 8, 9, 25}) {
    FiniteField f(q);
    for (Elt a = 0; a < q; ++a)
      for (Elt b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (Elt c = 0; c < q; c += 3)
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    // Frobenius is additive
    const auto p = f.characteristic();
    for (Elt a = 0; a < q; ++a)
      for (Elt b = 0; b < q; ++b)
        EXPECT_EQ(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
  }
}

TEST(Matrix, JordanType) {
  FiniteField f(3);
  Matrix u = Matrix::identity(3);
  u.at(0, 1) = 1;
  u.at(1, 2) = 1;
  EXPECT_EQ(jordan_type(f, u), (std::vector<unsigned>{3}));
  Matrix v = Matrix::identity(3);
  v.at(0, 2) = 2;
  EXPECT_EQ(jordan_type(f, v), (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(jordan_type(f, Matrix::identity(3)), (std::vector<unsigned>{1, 1, 1}));
}

struct Case {
  Family f;
  unsigned n;
  std::uint64_t q, order, vec_degree, proj_degree;
};

TEST(Classical, SmallInstances) {
  const std::vector<Case> cases{
      {Family::SL, 2, 3, 24, 8, 4},        {Family::SL, 2, 5, 120, 24, 6},
      {Family::GL, 2, 5, 480, 24, 6},      {Family::SL, 3, 2, 168, 7, 7},
      {Family::SU, 3, 3, 6048, 224, 28},   {Family::Sp, 4, 3, 51840, 80, 40},
      {Family::SO, 3, 5, 120, 24, 6},      {Family::SOplus, 4, 3, 576, 32, 16},
      {Family::SOminus, 4, 3, 720, 20, 10}, {Family::Sz, 4, 8, 29120, 455, 65},
      {Family::SL, 2, 8, 504, 63, 9}};
  for (const Case& c : cases) {
    SCOPED_TRACE(matrix_group_name(c.f, c.n, c.q));
    MatrixGroup mg = construct_classical(c.f, c.n, c.q);
    EXPECT_EQ(mg.expected_order, c.order);
    MatrixAction va = vector_action(mg);
    EXPECT_EQ(va.group().order(), c.order);
    EXPECT_EQ(va.degree(), c.vec_degree);
    MatrixAction pa = projective_action(mg);
    EXPECT_EQ(pa.degree(), c.proj_degree);
    // Sylow at the defining characteristic has the q-power order
    const std::uint64_t p = mg.field.characteristic();
    EXPECT_EQ(sylow(va.group(), p).order(), p_part(c.order, p));
    // JSON round trip revalidates
    MatrixGroup back = MatrixGroup::from_json(mg.to_json());
    EXPECT_EQ(back.to_json(), mg.to_json());
  }
}

TEST(Classical, MatrixRecoveryAndProjection) {
  MatrixGroup mg = construct_classical(Family::SL, 2, 5);
  MatrixAction va = vector_action(mg), pa = projective_action(mg);
  for (const Matrix& m : mg.generators) {
    const Perm x = va.perm_of(m);
    EXPECT_EQ(va.matrix_of(x), m);
    EXPECT_EQ(project_to(va, pa, x), pa.perm_of(m));
  }
  // -I acts trivially on projective points
  const Perm minus = va.perm_of(Matrix::scalar(2, mg.field.neg(1)));
  EXPECT_TRUE(va.group().contains(minus));
  EXPECT_TRUE(project_to(va, pa, minus).is_identity());
}

TEST(Classical, Validation) {
  MatrixGroup mg = construct_classical(Family::Sp, 4, 3);
  MatrixGroup bad = mg;
  bad.generators[0].at(0, 0) = bad.field.add(bad.generators[0].at(0, 0), 1);
  EXPECT_THROW(bad.validate(), InternalInconsistency);
  bad = mg;
  bad.expected_order += 1;
  EXPECT_THROW(bad.validate(), InternalInconsistency);
  EXPECT_THROW(classical_order(Family::Sz, 4, 4), InputError);
}

#include "picky/structure.hpp"
#include "picky/subnorm.hpp"
#include "picky/zoo/basic.hpp"
#include "picky/zoo/named.hpp"
#include "picky/zoo/recipe.hpp"

TEST(Named, RegistryGroups) {
  EXPECT_EQ(load_named("M12").order(), 95040u);
  EXPECT_EQ(load_named("PSL2_8").order(), 504u);
  EXPECT_EQ(load_named("PSL3_3").order(), 5616u);
  const Group s = load_named("SmallGroup_324_37");
  EXPECT_EQ(s.order(), 324u);
  EXPECT_THROW(load_named("M24"), InputError);
}

TEST(Named, SmallGroupStructure) {
  const Group g = load_named("SmallGroup_324_37");
  // O_3 has order 27 and the Sylow 2-subgroup (Klein four) is not normal
  EXPECT_EQ(o_p(g, 3).order(), 27u);
  const Group p2 = sylow(g, 2);
  EXPECT_EQ(p2.order(), 4u);
  EXPECT_FALSE(is_normal(g, p2));
}

TEST(Named, M12CentraliserOfOrder36) {
  const Group g = load_named("M12");
  ClassData cd(g);
  int found = 0;
  for (const auto& c : cd.classes())
    if (c.element_order == 3 && c.centralizer_order == 36) {
      ++found;
      EXPECT_EQ(centralizer(g, c.rep).order(), 36u);
    }
  EXPECT_EQ(found, 1);
  EXPECT_EQ(cd.size(), 15u);
}

TEST(Recipe, Families) {
  EXPECT_EQ(build_group("SL(2,3)").group.degree(), 8u);
  EXPECT_EQ(build_group("SU(3,3)").group.degree(), 28u);
  EXPECT_EQ(build_group("Sz(8)").group.degree(), 65u);
  EXPECT_EQ(build_group("PSL(2,5)").group.order(), 60u);
  EXPECT_EQ(build_group("SL(2,5)@projective").group.order(), 60u);
  EXPECT_EQ(build_group("Sym(4)").group.order(), 24u);
  EXPECT_EQ(build_group("Product(Sym(3), Cyclic(2))").group.order(), 12u);
  EXPECT_EQ(build_group("Wreath(Cyclic(2),Sym(3))").group.order(), 48u);
  EXPECT_EQ(build_group("M12").id, "M12");
  EXPECT_EQ(build_group(" Product( Alt(5) ,Alt(5) )").id, "Product(Alt(5),Alt(5))");
  EXPECT_THROW(build_group("Foo(3)"), InputError);
  EXPECT_THROW(build_group("SL(2,6)"), InputError);
  EXPECT_THROW(build_group("Sym(4"), InputError);
  EXPECT_THROW(build_group("PSL(2,5)@vectors"), InputError);
}

TEST(Recipe, CentralQuotients) {
  EXPECT_EQ(central_quotient(zoo::symmetric(4)).order(), 24u);
  EXPECT_EQ(build_group("CentralQuotient(SL(2,5))").group.order(), 60u);
  EXPECT_EQ(build_group("CentralQuotient(SL(2,3))").group.order(), 12u);
  const Group q = build_group("CentralQuotient(SL(3,4))").group;
  EXPECT_EQ(q.order(), 20160u);
}

TEST(Recipe, ProductSubnormaliserSplits) {
  const Group a5 = zoo::alternating(5);
  const Group g = zoo::direct_product(a5, a5);
  EXPECT_EQ(g.order(), 3600u);
  const Perm x1 = Perm::from_cycles(5, {{0, 1}, {2, 3}});
  const Perm x = zoo::embed_left(x1, 5) * zoo::embed_right(x1, 5);
  const Group s = subnormaliser(g, 2, x).subgroup;
  const Group s1 = subnormaliser(a5, 2, x1).subgroup;
  EXPECT_EQ(s.order(), s1.order() * s1.order());
}
