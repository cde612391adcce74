#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace picky {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} acting on the right: `p[i]` is the
/// image of point i, and `a * b` applies a first, then b.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws InputError if `images` is not a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }
  /// Builds from disjoint cycles; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long k) const;
  /// Order as the lcm of cycle lengths.
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;
  /// x^g = g^-1 x g
  Perm conjugate(const Perm& g) const;
  std::size_t smallest_moved_point() const; // degree() when identity

  std::string to_string() const;
  std::size_t hash() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend void compose_into(const Perm& a, const Perm& b, Perm& out);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

private:
  std::vector<Point> images_;
};

/// out = a * b without allocating when `out` already has the right size.
void compose_into(const Perm& a, const Perm& b, Perm& out);

/// True iff `images` is a permutation of 0..n-1.
bool is_bijection(std::span<const Point> images);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

/// p-part and p'-part of g: g = gp * gq with gp a p-element, gq a p'-element,
/// both powers of g.
struct PParts {
  Perm p_part;
  Perm p_prime_part;
};
PParts p_parts(const Perm& g, std::uint64_t p);

bool is_p_element(const Perm& g, std::uint64_t p);

} // namespace picky
