#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "picky/group.hpp"

namespace picky {

/// Permutation-generator document: degree, generator image arrays,
/// provenance text and an optional expected order checked at load.
struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::string provenance;
  std::optional<std::uint64_t> expected_order;

  nlohmann::json to_json() const;
  /// Throws InputError naming the offending generator on malformed images.
  static GeneratorFile from_json(const nlohmann::json& j);
  /// Group with verified chain; InternalInconsistency on an order mismatch.
  Group group() const;
};

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

} // namespace picky
