#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include "json.hpp"

namespace picky {

/// Exact element of a cyclotomic field, stored in the smallest Q(ζ_f) that
/// contains it, as rational coefficients on a fixed basis of Q(ζ_f).
///
/// Basis of Q(ζ_n): ζ_n^j belongs to it iff, for every prime power p^a
/// exactly dividing n, the leading base-p digit d = floor((j mod p^a) / p^(a-1))
/// satisfies d != 0 (p odd) or d == 0 (p = 2).
class Cyclotomic {
public:
  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(mpq_class(v)) {}
  Cyclotomic(const mpq_class& v);

  /// ζ_n^k
  static Cyclotomic zeta(std::uint64_t n, std::int64_t k = 1);
  /// sum_j coeffs[j] ζ_n^j for an arbitrary coefficient vector of length n.
  static Cyclotomic from_powers(std::uint64_t n, std::vector<mpq_class> coeffs);

  std::uint64_t conductor() const { return f_; }
  /// Nonzero basis coefficients (exponent, value), exponents ascending.
  const std::vector<std::pair<std::uint64_t, mpq_class>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return f_ == 1; }
  /// Throws PreconditionError unless rational.
  mpq_class rational() const;
  /// True iff rational with denominator 1.
  bool is_integer() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  /// Throws PreconditionError on zero.
  Cyclotomic inverse() const;

  /// ζ_f -> ζ_f^u. Throws PreconditionError unless gcd(u, f) = 1.
  Cyclotomic galois(std::int64_t u) const;
  /// Complex conjugate (u = -1).
  Cyclotomic conj() const { return galois(-1); }

  /// Coefficients on ζ_n^j, j < n, of this element written in Q(ζ_n);
  /// n must be a multiple of the conductor. Not reduced to a basis.
  std::vector<mpq_class> expand(std::uint64_t n) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
  /// Total order on the serialized form; used for deterministic sorting.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  /// GAP-style text, e.g. "-E(5)^2-E(5)^3" or "3/2".
  std::string to_string() const;

  /// {"conductor": f, "terms": [[j, num, den], ...]}; num/den are JSON
  /// integers when they fit in 64 bits, decimal strings otherwise.
  nlohmann::json to_json() const;
  static Cyclotomic from_json(const nlohmann::json& j);

private:
  static Cyclotomic canonical(std::uint64_t n, std::vector<mpq_class> dense);

  std::uint64_t f_ = 1;
  std::vector<std::pair<std::uint64_t, mpq_class>> terms_;
};

/// Sum of m[k] ζ_n^k.
Cyclotomic from_root_multiplicities(std::uint64_t n, const std::vector<std::int64_t>& m);

/// The abelian field Q(ζ_f)^H, stored with f minimal and H the sorted list
/// of units u mod f whose automorphism fixes the field. For f = 1 the unit
/// list is {0} (the single residue mod 1).
struct AbelianFieldTag {
  std::uint64_t conductor = 1;
  std::vector<std::uint64_t> stabilizer{0};

  std::uint64_t degree() const;
  friend bool operator==(const AbelianFieldTag&, const AbelianFieldTag&) = default;
  friend auto operator<=>(const AbelianFieldTag&, const AbelianFieldTag&) = default;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// p^e with e rational.
struct PPart {
  std::uint64_t p = 2;
  mpq_class e = 0;

  friend bool operator==(const PPart& a, const PPart& b) { return a.p == b.p && a.e == b.e; }
  friend bool operator<(const PPart& a, const PPart& b) {
    return a.p != b.p ? a.p < b.p : a.e < b.e;
  }
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Units u mod conductor with galois(α, u) = α.
std::vector<std::uint64_t> stabilizer(const Cyclotomic& a);
AbelianFieldTag value_field(const Cyclotomic& a);
/// Field generated by all values. Throws PreconditionError on an empty list.
AbelianFieldTag character_field(const std::vector<Cyclotomic>& values);
/// Smallest-conductor form of the field fixed by H <= (Z/m)^*.
AbelianFieldTag field_from_stabilizer(std::uint64_t m, const std::vector<std::uint64_t>& h);
/// {u in (Z/m)^* : u mod f in tag.stabilizer}; m must be a multiple of f.
std::vector<std::uint64_t> lift_stabilizer(const AbelianFieldTag& tag, std::uint64_t m);

/// N_{Q(α)/Q}(α), a rational. Throws PreconditionError on zero.
mpq_class field_norm(const Cyclotomic& a);
/// α_p = p^(v_p(N(α)) / [Q(α):Q]). Throws PreconditionError on zero.
PPart p_part(const Cyclotomic& a, std::uint64_t p);
/// p-adic valuation of a nonzero rational.
long valuation(const mpq_class& q, std::uint64_t p);

/// Invariant of K ⊗ Q_p inside Q_p(ζ_M): the subgroup H_M ∩ D of the
/// decomposition group D = {u in (Z/M)^* : u mod M_p' in <p>}. The modulus M
/// is part of the tag; tags compare only at a common modulus.
struct LocalTag {
  std::uint64_t p = 2;
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> subgroup;
  std::uint64_t decomposition_order = 1;

  /// [K_p : Q_p] = |D| / |H_M ∩ D|
  std::uint64_t local_degree() const { return decomposition_order / subgroup.size(); }
  friend bool operator==(const LocalTag&, const LocalTag&) = default;
  friend auto operator<=>(const LocalTag&, const LocalTag&) = default;
  nlohmann::json to_json() const;
};

/// Modulus used for local comparisons: m, times p when p does not divide m.
std::uint64_t local_modulus(std::uint64_t m, std::uint64_t p);
/// Throws PreconditionError unless tag.conductor divides modulus and p divides modulus.
LocalTag local_field_tag(const AbelianFieldTag& k, std::uint64_t p, std::uint64_t modulus);
/// Convenience: modulus = local_modulus(conductor, p).
LocalTag local_field_tag(const AbelianFieldTag& k, std::uint64_t p);

} // namespace picky
