#pragma once

#include <memory>
#include <vector>

#include "picky/cosets.hpp"
#include "picky/group.hpp"

namespace picky {

/// Faithful permutation representation of G/N. When the action on N-orbits
/// has kernel exactly N it is used; otherwise G acts on the right cosets of N.
/// Either way the image is compressed to its moved points.
class QuotientAction {
public:
  /// Throws PreconditionError unless N is a normal subgroup of G.
  QuotientAction(const Group& source, const Group& kernel);

  const Group& source() const { return source_; }
  const Group& kernel() const { return kernel_; }
  const Group& image() const { return image_; }
  bool uses_blocks() const { return blocks_; }

  Perm project(const Perm& g) const;
  Group project(const Group& h) const;
  /// Some preimage of an image element.
  Perm lift(const Perm& gbar) const;
  /// Full preimage of a subgroup of the image.
  Group lift(const Group& hbar) const;

private:
  std::vector<Point> raw_action(const Perm& g) const;

  Group source_, kernel_, image_;
  bool blocks_ = false;
  // block action
  std::vector<std::uint32_t> block_of_;
  std::vector<Point> block_rep_;
  // coset action
  std::shared_ptr<const RightCosets> cosets_;
  // compression of raw points to moved points
  std::vector<std::int64_t> compress_;
  std::size_t raw_degree_ = 0;
  // <(s, sbar)> on n + m points, base prefix on the image side
  Group diagonal_;
  std::size_t image_levels_ = 0;
};

} // namespace picky
