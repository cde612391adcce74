#include "picky/zoo/field.hpp"

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky::zoo {

const std::vector<FieldEntry>& field_table() {
  static const std::vector<FieldEntry> table = [] {
    std::vector<FieldEntry> t;
    for (std::uint64_t p = 2; p <= 81; ++p)
      if (is_prime(p))
        t.push_back({p, p, 1, {0, 1}});
    t.push_back({4, 2, 2, {1, 1, 1}});
    t.push_back({8, 2, 3, {1, 1, 0, 1}});
    t.push_back({16, 2, 4, {1, 1, 0, 0, 1}});
    t.push_back({32, 2, 5, {1, 0, 1, 0, 0, 1}});
    t.push_back({64, 2, 6, {1, 1, 0, 1, 1, 0, 1}});
    t.push_back({9, 3, 2, {2, 2, 1}});
    t.push_back({27, 3, 3, {1, 2, 0, 1}});
    t.push_back({81, 3, 4, {2, 0, 0, 1, 1}});
    t.push_back({25, 5, 2, {2, 4, 1}});
    t.push_back({49, 7, 2, {3, 6, 1}});
    return t;
  }();
  return table;
}

FiniteField::FiniteField(std::uint64_t q) : q_(q) {
  const FieldEntry* entry = nullptr;
  for (const auto& e : field_table())
    if (e.q == q)
      entry = &e;
  if (!entry)
    throw InputError("unsupported field order q = " + std::to_string(q));
  p_ = entry->p;
  k_ = entry->k;
  modulus_ = entry->modulus;

  auto digits = [&](Elt a) {
    std::vector<std::uint64_t> d(k_);
    for (unsigned i = 0; i < k_; ++i, a /= static_cast<Elt>(p_))
      d[i] = a % p_;
    return d;
  };
  auto index = [&](const std::vector<std::uint64_t>& d) {
    Elt a = 0;
    for (unsigned i = k_; i-- > 0;)
      a = static_cast<Elt>(a * p_ + d[i]);
    return a;
  };
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (Elt a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::vector<std::uint64_t> n(k_);
    for (unsigned i = 0; i < k_; ++i)
      n[i] = (p_ - da[i]) % p_;
    neg_[a] = index(n);
    for (Elt b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<std::uint64_t> s(k_), prod(2 * k_, 0);
      for (unsigned i = 0; i < k_; ++i)
        s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = index(s);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (unsigned d = 2 * k_; d-- > k_;) {
        const std::uint64_t c = prod[d];
        if (c == 0)
          continue;
        for (unsigned i = 0; i <= k_; ++i)
          prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
      prod.resize(k_);
      mul_[a * q + b] = index(prod);
    }
  }
  // No zero divisors iff the modulus is irreducible.
  inv_.assign(q, 0);
  for (Elt a = 1; a < q; ++a) {
    for (Elt b = 1; b < q; ++b) {
      if (mul(a, b) == 0)
        throw InternalInconsistency("field table: modulus for q = " + std::to_string(q) +
                                    " is reducible");
      if (mul(a, b) == 1)
        inv_[a] = b;
    }
  }
  const auto qs = prime_divisors(q - 1);
  gen_ = 0;
  for (Elt g = 1; g < q && gen_ == 0; ++g) {
    bool ok = true;
    for (std::uint64_t r : qs)
      if (pow(g, (q - 1) / r) == 1)
        ok = false;
    if (ok)
      gen_ = g;
  }
  if (gen_ == 0)
    throw InternalInconsistency("field: no multiplicative generator");
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  if (a == 0)
    throw PreconditionError("field: inverse of zero");
  return inv_[a];
}

FiniteField::Elt FiniteField::pow(Elt a, std::uint64_t e) const {
  Elt r = 1;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Elt FiniteField::from_int(std::int64_t c) const {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  return static_cast<Elt>(((c % p) + p) % p);
}

std::string FiniteField::to_string(Elt a) const {
  if (k_ == 1)
    return std::to_string(a);
  if (a == 0)
    return "0";
  for (std::uint64_t e = 0; e + 1 < q_; ++e)
    if (pow(gen_, e) == a)
      return "z^" + std::to_string(e);
  return "?";
}

} // namespace picky::zoo
