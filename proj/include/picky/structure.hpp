#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "picky/backtrack.hpp"
#include "picky/bounds.hpp"
#include "picky/group.hpp"

namespace picky {

/// Smallest normal subgroup of G containing H. H need not lie in G.
Group normal_closure(const Group& g, const Group& h);
bool is_normal(const Group& g, const Group& h);
/// Largest normal subgroup of G inside H.
Group core(const Group& g, const Group& h);

/// H subnormal in G, by normal-closure descent: G_0 = G, G_{i+1} = H^{G_i};
/// H is subnormal iff the sequence reaches H before it stalls.
/// Throws PreconditionError unless H <= G.
bool is_subnormal(const Group& g, const Group& h);

/// Oracle: search for a chain H = K_r ⊴ ... ⊴ K_0 = G through all normal
/// subgroups at each step. Exponential; intended for |G| <= 200.
bool is_subnormal_search(const Group& g, const Group& h, std::uint64_t bound = 200);

/// Normal subgroups of G that contain H (H included when normal).
std::vector<Group> normal_subgroups_containing(const Group& g, const Group& h,
                                               std::uint64_t bound);

/// Every subgroup of G (|G| <= bound), as joins of cyclic subgroups, in a
/// deterministic order (by order, then discovery).
std::vector<Group> all_subgroups(const Group& g, std::uint64_t bound);

/// Every p-subgroup of G (|G| <= bound).
std::vector<Group> p_subgroups(const Group& g, std::uint64_t p, std::uint64_t bound);

/// Every subgroup of G containing H (|G| <= bound).
std::vector<Group> overgroups(const Group& g, const Group& h, std::uint64_t bound);

/// Canonical key of a subgroup: hash of the sorted element hashes.
/// Equal subgroups give equal keys; callers confirm equality on collision.
std::uint64_t subgroup_key(const Group& h);

bool is_p_group(const Group& g, std::uint64_t p);

} // namespace picky
