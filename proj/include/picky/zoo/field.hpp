#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace picky::zoo {

/// F_q for prime powers q <= 81. Elements are indices 0..q-1: the index
/// sum c_i p^i stands for the residue sum c_i x^i modulo the shipped
/// irreducible polynomial. Arithmetic is by lookup tables.
class FiniteField {
public:
  using Elt = std::uint32_t;

  /// Throws InputError when q is not in the shipped table.
  explicit FiniteField(std::uint64_t q);

  std::uint64_t order() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  /// Monic modulus, lowest coefficient first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
  Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
  Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  /// Throws PreconditionError on zero.
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const;
  /// Image of the integer c under Z -> F_q.
  Elt from_int(std::int64_t c) const;
  /// Least element of multiplicative order q - 1.
  Elt generator() const { return gen_; }

  std::string to_string(Elt a) const;

private:
  std::uint64_t q_, p_;
  unsigned k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elt> add_, mul_, neg_, inv_;
  Elt gen_ = 1;
};

struct FieldEntry {
  std::uint64_t q, p;
  unsigned k;
  std::vector<std::uint32_t> modulus;
};

/// The fixed table of moduli, one per supported q. Changing an entry
/// changes point numberings downstream.
const std::vector<FieldEntry>& field_table();

} // namespace picky::zoo
