#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "picky/perm.hpp"

namespace picky {

/// Stabiliser chain built by deterministic Schreier-Sims.
///
/// Level l has base point b_l, strong generators S_l = S n G^(l) (the
/// generators fixing b_0..b_{l-1}), the orbit of b_l under <S_l> in BFS order,
/// and explicit transversal elements u with b_l^u = gamma. New base points are
/// the smallest point moved by the residue that needs them. A base prefix can
/// be prescribed; its levels may end up with trivial orbits.
class StabChain {
public:
  explicit StabChain(std::size_t degree, std::span<const Point> base_prefix = {});

  /// Adds g to the group. Returns false (and changes nothing) if g is
  /// already a member.
  bool add_generator(const Perm& g);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  Point base_point(std::size_t l) const { return levels_[l].base; }
  std::vector<Point> base() const;

  const std::vector<Point>& orbit(std::size_t l) const { return levels_[l].orbit; }
  bool in_orbit(std::size_t l, Point p) const { return levels_[l].pos[p] >= 0; }
  std::size_t orbit_position(std::size_t l, Point p) const {
    return static_cast<std::size_t>(levels_[l].pos[p]);
  }
  const Perm& transversal(std::size_t l, Point p) const {
    return levels_[l].trans[levels_[l].pos[p]];
  }
  const Perm& inverse_transversal(std::size_t l, Point p) const {
    return levels_[l].inv_trans[levels_[l].pos[p]];
  }
  const std::vector<Perm>& strong_generators(std::size_t l) const {
    return levels_[l].gens;
  }

  /// Product of orbit lengths; throws BoundExceeded on 64-bit overflow.
  std::uint64_t order() const;
  /// Order of the stabiliser G^(l).
  std::uint64_t stabilizer_order(std::size_t l) const;

  bool contains(const Perm& g) const;
  /// Sifts g starting at level `from`; returns the residue and the level at
  /// which sifting stopped (depth() when it passed every level).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const;

  /// True iff some group element maps b_0..b_{k-1} to images[0..k-1].
  bool is_base_image_prefix(std::span<const Point> images) const;

private:
  struct Level {
    Point base;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;
    std::vector<Perm> trans;
    std::vector<Perm> inv_trans;
    std::size_t checked_orbit = 0;
    std::size_t checked_gens = 0;
  };

  void push_level(Point base);
  void add_strong_generator(std::size_t l, const Perm& h);
  void extend_orbit(Level& lv);
  void complete(std::size_t from_level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

} // namespace picky
