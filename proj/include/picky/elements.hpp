#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "picky/group.hpp"

namespace picky {

/// Bijection between G and [0, |G|) through the stabiliser chain: an element
/// u_{k-1} ... u_0 (u_l a transversal element of level l) has mixed-radix
/// index whose most significant digit is the rank of b_0^g in the sorted
/// level-0 orbit. Index order is the streaming order used for enumeration.
class ElementIndexer {
public:
  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  explicit ElementIndexer(const Group& g);

  std::uint64_t size() const { return size_; }
  const Group& group() const { return group_; }
  const std::vector<Point>& base() const { return base_; }

  /// npos when g is not a member.
  std::uint64_t index_of(const Perm& g) const;
  /// `images` holds b_l^g for each base point; it is overwritten.
  std::uint64_t index_of_base_images(std::span<Point> images) const;
  Perm element(std::uint64_t idx) const;
  void element_into(std::uint64_t idx, Perm& out, Perm& scratch) const;

private:
  Group group_;
  std::vector<Point> base_;
  std::vector<std::vector<Point>> sorted_;
  std::vector<std::vector<std::int32_t>> rank_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_;
};

/// Streams every element of G in index order; `visit` returns false to stop.
/// Throws BoundExceeded when |G| > bound.
void for_each_element(const Group& g, std::uint64_t bound,
                      const std::function<bool(const Perm&)>& visit);

/// Uniformly random element from the chain.
Perm random_element(const Group& g, std::mt19937_64& rng);

} // namespace picky
