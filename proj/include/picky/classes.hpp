#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "picky/bounds.hpp"
#include "picky/elements.hpp"
#include "picky/group.hpp"

namespace picky {

struct ConjugacyClass {
  Perm rep;
  std::uint64_t size;
  std::uint64_t centralizer_order;
  std::uint64_t element_order;
};

/// Conjugacy classes of G, ordered by element order, then class size, then
/// representative (lexicographic on images). The representative is the
/// first class member in element-index order. Every element of G carries its
/// class label, so class lookup is a chain sift plus an array read.
class ClassData {
public:
  ClassData(const Group& g, const Bounds& bounds = {});

  const Group& group() const { return indexer_.group(); }
  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t k) const { return classes_[k]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }

  std::uint64_t exponent() const { return exponent_; }
  /// Primes dividing the exponent, ascending.
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  /// power_map(p)[k] = class of x_k^p, for each prime p dividing the exponent.
  const std::vector<std::size_t>& power_map(std::uint64_t p) const;
  /// Class of x_k^e for any integer e >= 0.
  std::size_t power_class(std::size_t k, std::uint64_t e) const;

  /// Class of g; throws PreconditionError if g is not in G.
  std::size_t class_of(const Perm& g) const;
  std::size_t class_of_index(std::uint64_t element_index) const {
    return static_cast<std::size_t>(label_[element_index]);
  }
  const ElementIndexer& indexer() const { return indexer_; }

private:
  ElementIndexer indexer_;
  std::vector<std::int32_t> label_;
  std::vector<ConjugacyClass> classes_;
  std::uint64_t exponent_ = 1;
  std::vector<std::uint64_t> primes_;
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps_;
};

/// Convenience entry point.
inline ClassData conjugacy_classes(const Group& g, const Bounds& bounds = {}) {
  return ClassData(g, bounds);
}

/// Exponent of G from the element orders of class representatives.
std::uint64_t group_exponent(const ClassData& cd);

} // namespace picky
