#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "picky/group.hpp"

namespace picky {

/// Smallest element of the right coset H g, comparing base images along
/// H's chain (level by level, minimal image of each base point).
Perm canonical_right_coset_rep(const Group& h, const Perm& g);

/// The right cosets H g of H in G, enumerated by orbit search under right
/// multiplication by G's generators. Throws BoundExceeded above `bound`.
class RightCosets {
public:
  RightCosets(const Group& g, const Group& h, std::uint64_t bound);

  std::size_t size() const { return reps_.size(); }
  const Perm& rep(std::size_t i) const { return reps_[i]; }
  const std::vector<Perm>& reps() const { return reps_; }
  /// Index of the coset H g.
  std::size_t index_of(const Perm& g) const;

private:
  struct VecHash {
    std::size_t operator()(const std::vector<Point>& v) const;
  };
  Group h_;
  std::vector<Perm> reps_;
  std::unordered_map<std::vector<Point>, std::uint32_t, VecHash> index_;
};

} // namespace picky
