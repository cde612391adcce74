#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picky/genfile.hpp"
#include "picky/group.hpp"
#include "picky/zoo/matrix.hpp"

namespace picky::zoo {

/// $PICKY_DATA_DIR when set, otherwise the data directory of the source tree.
std::string data_dir();

struct NamedEntry {
  std::string name;
  std::string file;
  std::uint64_t expected_order = 0;
  /// FNV-1a of the serialized generator list, hex.
  std::string hash;
  std::string caveat;
};

/// Entries of groups/registry.json.
std::vector<NamedEntry> named_registry();
std::string generator_hash(const GeneratorFile& f);
/// Loads a registry group; order and hash are checked against the registry.
Group load_named(const std::string& name);

/// Shipped generator data (matrices/<name>.json), validated.
MatrixGroup load_matrix_group(const std::string& name);
/// Shipped data when present, otherwise constructed on the fly.
MatrixGroup matrix_group(Family f, unsigned n, std::uint64_t q);

} // namespace picky::zoo
