#include "picky/sylow.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "picky/backtrack.hpp"
#include "picky/elements.hpp"
#include "picky/errors.hpp"
#include "picky/structure.hpp"
#include "picky/util.hpp"

namespace picky {

namespace {

// h in N_G(P) \ P a p-element; returns a power of h whose image in N/P has
// order p.
Perm order_p_mod(const Group& pgrp, const Perm& h, std::uint64_t p) {
  Perm cur = h;
  for (;;) {
    Perm next = cur.pow(static_cast<long long>(p));
    if (pgrp.contains(next))
      return cur;
    cur = std::move(next);
  }
}

Group normalizer_of_p_subgroup(const Group& g, const Group& pgrp) {
  if (pgrp.is_trivial())
    return g;
  if (pgrp.generators().size() == 1)
    return cyclic_normalizer(g, pgrp.generators()[0]);
  return normalizer_backtrack(g, pgrp);
}

} // namespace

Group cyclic_normalizer(const Group& g, const Perm& x) {
  SubgroupBuilder b(centralizer_backtrack(g, x));
  const std::uint64_t o = x.order();
  // Exponents i with x^t = x^i for some t found so far; a subgroup of units.
  std::vector<bool> reached(o, false);
  reached[1 % o] = true;
  for (std::uint64_t i = 2; i < o; ++i) {
    if (std::gcd(i, o) != 1 || reached[i])
      continue;
    auto t = conjugating_element(g, x, x.pow(static_cast<long long>(i)));
    if (!t)
      continue;
    b.add(*t);
    std::vector<std::uint64_t> cur;
    for (std::uint64_t j = 0; j < o; ++j)
      if (reached[j])
        cur.push_back(j);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const std::uint64_t nj = cur[k] * i % o;
      if (!reached[nj]) {
        reached[nj] = true;
        cur.push_back(nj);
      }
    }
  }
  return b.build();
}

Group sylow(const Group& g, std::uint64_t p) {
  const std::uint64_t target = p_part(g.order(), p);
  Group ambient = g;
  Group pg = Group::trivial(g.degree());
  while (pg.order() < target) {
    Group n = normalizer_of_p_subgroup(ambient, pg);
    // A Sylow subgroup of N_G(P) containing P is one of G when N has full p-part.
    if (p_part(n.order(), p) == target)
      ambient = n;
    std::optional<Perm> ext;
    auto try_elem = [&](const Perm& e) {
      Perm h = p_parts(e, p).p_part;
      if (h.is_identity() || pg.contains(h))
        return false;
      ext = order_p_mod(pg, h, p);
      return true;
    };
    for (const Perm& s : n.generators())
      if (try_elem(s))
        break;
    if (!ext)
      for_each_element(n, ~std::uint64_t{0}, [&](const Perm& e) { return !try_elem(e); });
    if (!ext)
      throw InternalInconsistency("sylow: no extension element in N_G(P)");
    SubgroupBuilder b(pg);
    b.add(*ext);
    pg = b.build();
  }
  return pg;
}

SylowSystem::SylowSystem(const Group& g, std::uint64_t p, const Bounds& bounds)
    : g_(g), p_(p), bounds_(bounds), sylow_(picky::sylow(g, p)),
      normalizer_(normalizer_of_p_subgroup(g, sylow_)) {}

const RightCosets& SylowSystem::cosets() const {
  if (!cosets_)
    cosets_ = std::make_shared<RightCosets>(g_, normalizer_, bounds_.conjugate_scan);
  return *cosets_;
}

std::vector<Perm> SylowSystem::conjugators_containing(const Perm& x) const {
  std::vector<Perm> out;
  for (const Perm& t : cosets().reps()) {
    // x in P^t iff t x t^-1 in P
    if (sylow_.contains(t * x * t.inverse()))
      out.push_back(t);
  }
  return out;
}

Perm SylowSystem::conjugator_into(const Perm& x) const {
  if (sylow_.contains(x))
    return Perm::identity(g_.degree());
  // Find a conjugate of x inside P: walk P's elements of the right order.
  const std::uint64_t o = x.order();
  std::optional<Perm> t;
  for_each_element(sylow_, ~std::uint64_t{0}, [&](const Perm& y) {
    if (y.order() != o)
      return true;
    if (auto c = conjugating_element(g_, y, x)) {
      // y^c = x, so x in P^c
      t = *c;
      return false;
    }
    return true;
  });
  if (!t)
    throw InternalInconsistency("no Sylow subgroup contains the p-element");
  return *t;
}

void require_p_element(const Group& g, std::uint64_t p, const Perm& x) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not a prime");
  if (!g.contains(x))
    throw PreconditionError("element is not in the group");
  if (!is_p_element(x, p))
    throw PreconditionError("element of order " + std::to_string(x.order()) +
                            " is not a " + std::to_string(p) + "-element");
}

SylowWitness sylows_containing(const SylowSystem& sys, const Perm& x) {
  require_p_element(sys.group(), sys.prime(), x);
  SylowWitness w{sys.prime(), sys.sylow(), 0, sys.conjugators_containing(x)};
  w.count_containing_x = w.conjugator_reps.size();
  return w;
}

SylowWitness sylows_containing(const Group& g, std::uint64_t p, const Perm& x,
                               const Bounds& bounds) {
  return sylows_containing(SylowSystem(g, p, bounds), x);
}

Group o_p(const Group& g, std::uint64_t p) { return core(g, sylow(g, p)); }

Group o_p_prime_residual(const Group& g, std::uint64_t p) {
  return normal_closure(g, sylow(g, p));
}

} // namespace picky
