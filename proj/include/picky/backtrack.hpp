#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "picky/bounds.hpp"
#include "picky/group.hpp"

namespace picky {

/// A search over the elements of G, organised by the images of G's base.
///
/// `prune` sees the images of b_0..b_j for a partial element and returns
/// false when no element of G extending those images can satisfy `accept`.
/// It must never prune a node that leads to an accepted element.
struct SearchProperty {
  std::function<bool(std::span<const Point> images)> prune;
  std::function<bool(const Perm&)> accept;
};

/// {g in G : accept(g)}, which must be a subgroup. `known` must be a subgroup
/// of the answer; its orbits prune whole cosets.
Group subgroup_search(const Group& g, const SearchProperty& prop,
                      const Group& known);

/// First element of G (in base-image lexicographic order) with accept(g).
std::optional<Perm> element_search(const Group& g, const SearchProperty& prop);

/// C_G(x). x need not lie in G. Backtrack with cycle-structure pruning.
Group centralizer_backtrack(const Group& g, const Perm& x);
/// N_G(H). H need not lie in G. Backtrack with orbit-structure pruning.
Group normalizer_backtrack(const Group& g, const Group& h);
/// Some t in G with x^t = y, if any.
std::optional<Perm> conjugating_element(const Group& g, const Perm& x,
                                        const Perm& y);
Group intersection(const Group& a, const Group& b);

/// Oracles: closure of the elements passing `accept` in a full scan of G.
Group exhaustive_subgroup(const Group& g, std::uint64_t bound,
                          const std::function<bool(const Perm&)>& accept);
Group centralizer_exhaustive(const Group& g, const Perm& x, std::uint64_t bound);
Group normalizer_exhaustive(const Group& g, const Group& h, std::uint64_t bound);

/// Checked public entry points. Preconditions: x in G, H <= G. When
/// |G| <= bounds.exhaustive_oracle the backtrack result is compared with the
/// exhaustive scan and a mismatch raises InternalInconsistency.
Group centralizer(const Group& g, const Perm& x, const Bounds& bounds = {});
Group normalizer(const Group& g, const Group& h, const Bounds& bounds = {});

/// Centre of G, as the intersection of the generator centralisers.
Group center(const Group& g);

} // namespace picky
