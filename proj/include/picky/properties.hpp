#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "picky/bounds.hpp"
#include "picky/group.hpp"

namespace picky {

/// Counts of checked instances of one structural property.
struct PropertyTally {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  /// The first few failing instances.
  std::vector<std::string> examples;
};

struct PropertyReport {
  std::uint64_t group_order = 1;
  std::uint64_t p = 2;
  std::vector<PropertyTally> tallies;

  bool ok() const;
  std::uint64_t checks() const;
  PropertyTally& tally(const std::string& name);
  const PropertyTally* find(const std::string& name) const;
  /// Adds the counts of `other` property by property.
  void merge(const PropertyReport& other);
  nlohmann::json to_json() const;
};

struct PropertyOptions {
  /// Overgroup scan of the Sylow normaliser runs up to this order.
  std::uint64_t overgroup_order = 200;
  /// Radical p-subgroup enumeration runs up to this order.
  std::uint64_t radical_order = 2000;
  /// Conjugator search inside Sub_G(x) runs up to this subgroup order.
  std::uint64_t conjugator_search_order = 100'000;
  /// Random conjugates per class for the equivariance check.
  unsigned conjugation_samples = 2;
  std::uint64_t seed = 1;
};

/// Checks every subnormaliser property on each nontrivial p-element class of
/// G: agreement of the three methods, containment of N_G(P) and C_G(x), the
/// picky criteria, quotients by O_p(G) and Z(G), the p'-index residual, the
/// abelian-Sylow generation formula, conjugacy inside Sub_G(x), the
/// overgroup bound, generation by radical normalisers and equivariance under
/// conjugation.
PropertyReport check_subnormaliser_properties(const Group& g, std::uint64_t p,
                                              const Bounds& bounds = {},
                                              const PropertyOptions& opt = {});

/// Sub of (x1, x2) in H1 x H2 is Sub(x1) x Sub(x2), over all pairs of
/// p-element class representatives that are not both trivial.
PropertyReport check_product_property(const Group& h1, const Group& h2, std::uint64_t p,
                                      const Bounds& bounds = {});

} // namespace picky
