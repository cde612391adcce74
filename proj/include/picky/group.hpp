#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "picky/chain.hpp"
#include "picky/perm.hpp"

namespace picky {

/// Immutable finite permutation group: generators plus a verified
/// stabiliser chain. Copies share the chain.
class Group {
public:
  Group();
  static Group trivial(std::size_t degree);
  /// Identity generators are dropped. The chain uses `base_prefix` first,
  /// then smallest moved points.
  static Group generated(std::size_t degree, std::vector<Perm> gens,
                         std::span<const Point> base_prefix = {});

  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& g) const;
  const StabChain& chain() const;
  std::vector<Point> base() const { return chain().base(); }

  /// Same group, chain rebuilt over the given base prefix.
  Group with_base(std::span<const Point> base_prefix) const;

private:
  struct Data;
  explicit Group(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
  friend class SubgroupBuilder;
};

/// Validating entry point for raw image arrays. Throws InputError naming
/// the offending generator.
Group group_from_generators(const std::vector<std::vector<Point>>& gens,
                            std::size_t degree);

/// Incremental closure <S>; add() returns true when the element was new.
class SubgroupBuilder {
public:
  explicit SubgroupBuilder(std::size_t degree, std::span<const Point> base_prefix = {});
  explicit SubgroupBuilder(const Group& start);
  bool add(const Perm& g);
  bool contains(const Perm& g) const { return chain_.contains(g); }
  std::uint64_t order() const { return chain_.order(); }
  Group build() const;

private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  StabChain chain_;
};

bool is_subgroup(const Group& h, const Group& g);
bool same_group(const Group& a, const Group& b);
Group join(const Group& a, const Group& b);
/// H^g = g^-1 H g
Group conjugate(const Group& h, const Perm& g);
Group cyclic_subgroup(const Perm& g);

} // namespace picky
