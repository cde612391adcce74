#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "picky/bounds.hpp"
#include "picky/classes.hpp"
#include "picky/cyclo.hpp"

namespace picky {

/// Exact table of irreducible characters. Rows are sorted by degree, then
/// lexicographically by value (Cyclotomic ordering). Class data is carried
/// in the table so imported tables can be verified without the group.
struct CharacterTable {
  std::string provenance;
  std::uint64_t group_order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> centralizer_orders;
  std::vector<std::uint64_t> element_orders;
  /// Point images of the class representatives; empty for imported tables.
  std::vector<std::vector<Point>> class_reps;
  /// power_maps[p][k] = class of x_k^p, for every prime p <= exponent. Larger
  /// primes reduce modulo the element order.
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps;
  std::vector<std::vector<Cyclotomic>> values;

  std::size_t num_classes() const { return class_sizes.size(); }
  std::size_t num_chars() const { return values.size(); }
  std::uint64_t degree(std::size_t row) const;
  /// Class of x_k^e computed from the prime power maps.
  std::size_t power_class(std::size_t k, std::uint64_t e) const;
  /// Row of the trivial character.
  std::size_t trivial_row() const;

  nlohmann::json to_json() const;
  static CharacterTable from_json(const nlohmann::json& j);
};

/// Primes whose power maps a table stores.
std::vector<std::uint64_t> power_map_primes(std::uint64_t exponent);

/// Integer matrix M with M[j][k] = #{a in C_i : a^-1 x_k in C_j}; the class
/// function vector of each irreducible is a right eigenvector of M.
std::vector<std::vector<std::uint64_t>> class_matrix(const ClassData& cd, std::size_t i);

/// Smallest prime l = 1 mod exponent with l > 2 sqrt(order). Throws
/// BoundExceeded when none lies below `search_bound`.
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order,
                          std::uint64_t search_bound);

/// Dixon-Schneider over F_l with eigenvalue multiplicity lifting.
/// Throws BoundExceeded past bounds.class_count / character_table_order and
/// InternalInconsistency if the result fails verify_table.
CharacterTable character_table(const ClassData& cd, const Bounds& bounds = {},
                               const std::string& provenance = "");
CharacterTable character_table(const Group& g, const Bounds& bounds = {},
                               const std::string& provenance = "");

struct TableVerification {
  bool degrees_ok = false;
  bool sum_of_squares_ok = false;
  bool row_orthogonality_ok = false;
  bool column_orthogonality_ok = false;
  bool galois_ok = false;
  bool power_maps_ok = false;
  /// First failing check, empty on success.
  std::string first_failure;
  bool ok() const { return first_failure.empty(); }
  nlohmann::json to_json() const;
};

/// Checks every table invariant exactly. When `cd` is given, the stored
/// power maps are also compared with the group.
TableVerification verify_table(const CharacterTable& t, const ClassData* cd = nullptr);

/// Rows whose value on class k is nonzero.
std::vector<std::size_t> irr_x(const CharacterTable& t, std::size_t k);

} // namespace picky
