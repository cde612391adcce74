#pragma once

#include <cstdint>

namespace picky {

/// Size limits that keep every computation at desk scale. Every operation
/// that could blow up checks the relevant field and throws BoundExceeded.
struct Bounds {
  /// Streaming enumeration and class labelling over all of G.
  std::uint64_t enumeration = 10'000'000;
  /// Exhaustive-scan oracles cross-check backtrack results up to this order.
  std::uint64_t exhaustive_oracle = 100'000;
  /// Definitional subnormaliser scan over all g in G.
  std::uint64_t brute_force = 100'000;
  /// Element-level fusion scan; above it the fusion method searches
  /// conjugators per Sylow element instead.
  std::uint64_t fusion_scan = 100'000;
  /// Number of Sylow conjugates iterated by sylows_containing.
  std::uint64_t conjugate_scan = 1'000'000;
  /// Largest number of classes accepted by the character-table engine.
  std::uint64_t class_count = 120;
  /// Largest prime tried when looking for a Dixon prime.
  std::uint64_t dixon_prime_search = 100'000'000;
  /// Largest group order for character tables.
  std::uint64_t character_table_order = 10'000'000;
};

} // namespace picky
