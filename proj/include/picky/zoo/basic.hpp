#pragma once

#include <cstdint>
#include <vector>

#include "picky/group.hpp"

namespace picky::zoo {

Group symmetric(std::size_t n);
Group alternating(std::size_t n);
Group cyclic(std::size_t n);
/// Dihedral group of the given order (2m, acting on m points; m >= 3).
Group dihedral(std::size_t order);
/// Quaternion group of order 8 in its regular representation.
Group quaternion8();
/// Product of cyclic groups of the given orders, on disjoint cycles.
Group abelian(const std::vector<std::size_t>& orders);
/// AGL(1, p) for a prime p: x -> ax + b on p points.
Group affine_line(std::uint64_t p);

/// Direct product on the disjoint union of domains (G1 first).
Group direct_product(const Group& a, const Group& b);
/// Embedding of an element of a factor into a direct product.
Perm embed_left(const Perm& g, std::size_t right_degree);
Perm embed_right(const Perm& g, std::size_t left_degree);
/// Imprimitive wreath product G wr H, with H a permutation group on m points
/// permuting m copies of G's domain.
Group wreath(const Group& g, const Group& h);
/// G / Z(G) through the quotient action, compressed to moved points.
Group central_quotient(const Group& g);
/// F_3^3 split by A_4 acting monomially, as affine maps on 27 points.
Group affine_3_cubed_a4();

} // namespace picky::zoo
