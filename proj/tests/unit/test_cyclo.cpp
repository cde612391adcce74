#include <gtest/gtest.h>

#include <random>

#include "picky/cyclo.hpp"
#include "picky/errors.hpp"
#include "picky/util.hpp"

using namespace picky;

namespace {

using Poly = std::vector<mpq_class>; // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

// remainder of a modulo monic b
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const mpq_class lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= lead * b[i];
    trim(a);
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const mpq_class lead = a.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= lead * b[i];
    trim(a);
  }
  return q;
}

Poly cyclotomic_poly(std::uint64_t n) {
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0)
      p = poly_div_exact(p, cyclotomic_poly(d));
  return p;
}

// True iff sum c_j x^j vanishes at a primitive n-th root of unity.
bool vanishes(std::uint64_t n, const Poly& c) { return poly_mod(c, cyclotomic_poly(n)).empty(); }

Poly random_dense(std::mt19937_64& rng, std::uint64_t n, int density) {
  Poly d(n);
  std::uniform_int_distribution<int> coin(0, 99), val(-5, 5), den(1, 3);
  for (auto& x : d)
    if (coin(rng) < density)
      x = mpq_class(val(rng), den(rng));
  for (auto& x : d)
    x.canonicalize();
  return d;
}

// a - b expanded at modulus n as a polynomial
Poly difference(const Cyclotomic& a, const Poly& b, std::uint64_t n) {
  Poly e = a.expand(n);
  for (std::size_t i = 0; i < n; ++i)
    e[i] -= b[i];
  return e;
}

Cyclotomic sqrt5() { return Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4); }

} // namespace

TEST(Cyclo, SpecArithmetic) {
  EXPECT_TRUE((Cyclotomic(1L) + Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2)).is_zero());
  Cyclotomic z8sq = Cyclotomic::zeta(8) * Cyclotomic::zeta(8);
  EXPECT_EQ(z8sq.conductor(), 4u);
  EXPECT_EQ(z8sq, Cyclotomic::zeta(4));
  Cyclotomic a = Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4);
  Cyclotomic b = Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3);
  EXPECT_EQ(a * b, Cyclotomic(-1L));
  EXPECT_THROW(Cyclotomic().inverse(), PreconditionError);
}

TEST(Cyclo, SpecGalois) {
  Cyclotomic a = sqrt5();
  EXPECT_EQ(a.galois(1), a);
  EXPECT_EQ(Cyclotomic(mpq_class(3, 7)).galois(2), Cyclotomic(mpq_class(3, 7)));
  EXPECT_EQ(a.galois(2), Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3));
  EXPECT_THROW(Cyclotomic::zeta(6).galois(3), PreconditionError);
}

TEST(Cyclo, SpecValueField) {
  EXPECT_EQ(value_field(Cyclotomic(7L)), (AbelianFieldTag{1, {0}}));
  EXPECT_EQ(value_field(sqrt5()), (AbelianFieldTag{5, {1, 4}}));
  EXPECT_EQ(value_field(Cyclotomic::zeta(3)), (AbelianFieldTag{3, {1}}));
}

TEST(Cyclo, SpecCharacterField) {
  EXPECT_EQ(character_field({Cyclotomic(1L), Cyclotomic(-2L)}), (AbelianFieldTag{1, {0}}));
  EXPECT_EQ(character_field({Cyclotomic(1L), Cyclotomic::zeta(3)}), (AbelianFieldTag{3, {1}}));
  AbelianFieldTag k = character_field({sqrt5(), Cyclotomic::zeta(3)});
  EXPECT_EQ(k.conductor, 15u);
  EXPECT_EQ(k.degree(), 4u);
  EXPECT_EQ(k.stabilizer, (std::vector<std::uint64_t>{1, 4}));
}

TEST(Cyclo, SpecPPart) {
  EXPECT_EQ(p_part(Cyclotomic(12L), 2), (PPart{2, 2}));
  EXPECT_EQ(p_part(Cyclotomic::zeta(3), 3), (PPart{3, 0}));
  Cyclotomic r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7);
  EXPECT_EQ(field_norm(r2), mpq_class(-2));
  EXPECT_EQ(p_part(r2, 2), (PPart{2, mpq_class(1, 2)}));
  EXPECT_THROW(p_part(Cyclotomic(), 2), PreconditionError);
}

TEST(Cyclo, SpecLocalTag) {
  AbelianFieldTag q{1, {0}};
  LocalTag tq = local_field_tag(q, 2, 10);
  EXPECT_EQ(tq.subgroup.size(), tq.decomposition_order);
  AbelianFieldTag k = value_field(sqrt5());
  // 11 splits in Q(sqrt 5): local degree 1
  LocalTag t11 = local_field_tag(k, 11);
  EXPECT_EQ(t11.local_degree(), 1u);
  // 2 is inert: the unramified quadratic extension
  LocalTag t2 = local_field_tag(k, 2);
  EXPECT_EQ(t2.local_degree(), 2u);
  EXPECT_EQ(lift_stabilizer(k, 10), (std::vector<std::uint64_t>{1, 9}));
  // Q(ζ_3) and Q(ζ_5)^<4> = Q(sqrt 5) agree over Q_2 only at a common modulus
  AbelianFieldTag z3 = value_field(Cyclotomic::zeta(3));
  EXPECT_EQ(local_field_tag(z3, 2, 30), local_field_tag(k, 2, 30));
}

TEST(Cyclo, CanonicalFormIsEqualInField) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 400; ++it) {
    const std::uint64_t n = 1 + rng() % 60;
    Poly d = random_dense(rng, n, 30);
    Cyclotomic a = Cyclotomic::from_powers(n, d);
    EXPECT_EQ(n % a.conductor(), 0u);
    EXPECT_TRUE(vanishes(n, difference(a, d, n))) << n << " " << a.to_string();
    // idempotent
    EXPECT_EQ(Cyclotomic::from_powers(n, a.expand(n)), a);
    EXPECT_EQ(a.conductor() % 4 == 2, false);
  }
}

TEST(Cyclo, ArithmeticAgreesWithNaive) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10000; ++it) {
    const std::uint64_t n = 1 + rng() % 60;
    Poly x = random_dense(rng, n, 15), y = random_dense(rng, n, 15);
    Poly sum(n), prod(n);
    for (std::size_t i = 0; i < n; ++i) {
      sum[i] = x[i] + y[i];
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(x[i]) != 0 && sgn(y[j]) != 0)
          prod[(i + j) % n] += x[i] * y[j];
    }
    Cyclotomic a = Cyclotomic::from_powers(n, x), b = Cyclotomic::from_powers(n, y);
    ASSERT_EQ(a + b, Cyclotomic::from_powers(n, sum));
    ASSERT_EQ(a * b, Cyclotomic::from_powers(n, prod));
  }
}

TEST(Cyclo, InverseAndGaloisAction) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const std::uint64_t n = 1 + rng() % 40;
    Cyclotomic a = Cyclotomic::from_powers(n, random_dense(rng, n, 40));
    if (a.is_zero())
      continue;
    EXPECT_EQ(a * a.inverse(), Cyclotomic(1L));
    const std::uint64_t f = a.conductor();
    for (auto u : units_mod(f))
      for (auto v : units_mod(f)) {
        if ((u + v) % 3 != 0)
          continue;
        EXPECT_EQ(a.galois(u).galois(v), a.galois(u * v % f));
      }
    for (auto u : units_mod(f))
      EXPECT_EQ(value_field(a.galois(u)), value_field(a));
    // norm has no irrational part
    EXPECT_NO_THROW(field_norm(a));
  }
}

namespace {
// Degree of the minimal polynomial by rank of powers in Q(ζ_f) coordinates.
std::uint64_t minpoly_degree(const Cyclotomic& a) {
  const std::uint64_t f = a.conductor();
  const Poly phi = cyclotomic_poly(f);
  std::vector<Poly> rows;
  Cyclotomic pw(1L);
  for (std::uint64_t k = 0;; ++k) {
    Poly v = poly_mod(pw.expand(f), phi);
    v.resize(f);
    // eliminate against rows (each row has a pivot)
    for (const Poly& r : rows) {
      std::size_t piv = 0;
      while (sgn(r[piv]) == 0)
        ++piv;
      if (sgn(v[piv]) != 0) {
        mpq_class c = v[piv] / r[piv];
        for (std::size_t i = 0; i < f; ++i)
          v[i] -= c * r[i];
      }
    }
    bool zero = true;
    for (auto& x : v)
      if (sgn(x) != 0)
        zero = false;
    if (zero)
      return k;
    rows.push_back(v);
    pw *= a;
  }
}
} // namespace

TEST(Cyclo, DegreeMatchesMinimalPolynomial) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 150; ++it) {
    const std::uint64_t n = 1 + rng() % 60;
    Cyclotomic a = Cyclotomic::from_powers(n, random_dense(rng, n, 8));
    if (a.is_zero())
      continue;
    EXPECT_EQ(value_field(a).degree(), minpoly_degree(a)) << a.to_string();
  }
}

TEST(Cyclo, JsonRoundTrip) {
  Cyclotomic a = sqrt5() * Cyclotomic(mpq_class(7, 3)) + Cyclotomic::zeta(12);
  EXPECT_EQ(Cyclotomic::from_json(a.to_json()), a);
  EXPECT_EQ(a.to_json().dump(), Cyclotomic::from_json(a.to_json()).to_json().dump());
  EXPECT_EQ(Cyclotomic::zeta(5, 2).to_string(), "E(5)^2");
}
