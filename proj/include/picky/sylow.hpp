#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "picky/bounds.hpp"
#include "picky/cosets.hpp"
#include "picky/group.hpp"

namespace picky {

/// A Sylow p-subgroup by p-subgroup growth: starting from P = 1, repeatedly
/// compute N = N_G(P), take the first element of N (generators, then index
/// order) whose p-part leaves P, raise it to an order-p image in N/P and
/// adjoin it. Trivial when p does not divide |G|.
Group sylow(const Group& g, std::uint64_t p);

/// N_G(<x>) as <C_G(x), t_i> with x^{t_i} = x^i.
Group cyclic_normalizer(const Group& g, const Perm& x);

/// A Sylow p-subgroup P, its normaliser, and the conjugates P^t indexed by
/// the right cosets N t.
class SylowSystem {
public:
  SylowSystem(const Group& g, std::uint64_t p, const Bounds& bounds = {});

  const Group& group() const { return g_; }
  std::uint64_t prime() const { return p_; }
  const Group& sylow() const { return sylow_; }
  const Group& normalizer() const { return normalizer_; }
  /// Number of Sylow p-subgroups, [G : N_G(P)].
  std::uint64_t count() const { return g_.order() / normalizer_.order(); }

  /// Conjugators t (one per Sylow P^t) with x in P^t, in coset order.
  /// Throws BoundExceeded when count() exceeds bounds.conjugate_scan.
  std::vector<Perm> conjugators_containing(const Perm& x) const;
  /// Some t with x in P^t; needs only a conjugacy search inside G.
  Perm conjugator_into(const Perm& x) const;

private:
  const RightCosets& cosets() const;

  Group g_;
  std::uint64_t p_;
  Bounds bounds_;
  Group sylow_;
  Group normalizer_;
  mutable std::shared_ptr<RightCosets> cosets_;
};

struct SylowWitness {
  std::uint64_t p;
  Group sylow;
  std::uint64_t count_containing_x;
  std::vector<Perm> conjugator_reps;
};

/// Throws PreconditionError unless x is a p-element of G.
SylowWitness sylows_containing(const SylowSystem& sys, const Perm& x);
SylowWitness sylows_containing(const Group& g, std::uint64_t p, const Perm& x,
                               const Bounds& bounds = {});

/// O_p(G), the core of a Sylow p-subgroup.
Group o_p(const Group& g, std::uint64_t p);
/// O^{p'}(G), the normal closure of a Sylow p-subgroup.
Group o_p_prime_residual(const Group& g, std::uint64_t p);

void require_p_element(const Group& g, std::uint64_t p, const Perm& x);

} // namespace picky
