#include "picky/zoo/named.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "picky/errors.hpp"
#include "picky/util.hpp"
#include "picky/zoo/construct.hpp"

namespace picky::zoo {

using nlohmann::json;

std::string data_dir() {
  if (const char* env = std::getenv("PICKY_DATA_DIR"); env && *env)
    return env;
  return PICKY_DATA_DIR_DEFAULT;
}

std::vector<NamedEntry> named_registry() {
  const json j = read_json_file(data_dir() + "/groups/registry.json");
  std::vector<NamedEntry> out;
  try {
    for (const auto& e : j.at("groups"))
      out.push_back({e.at("name").get<std::string>(), e.at("file").get<std::string>(),
                     e.at("expected_order").get<std::uint64_t>(),
                     e.at("hash").get<std::string>(), e.value("caveat", "")});
  } catch (const json::exception& e) {
    throw InputError(std::string("group registry: malformed: ") + e.what());
  }
  return out;
}

std::string generator_hash(const GeneratorFile& f) {
  const std::string s = f.to_json().at("generators").dump();
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(s.data(), s.size());
  return os.str();
}

Group load_named(const std::string& name) {
  for (const NamedEntry& e : named_registry()) {
    if (e.name != name)
      continue;
    GeneratorFile f = GeneratorFile::from_json(read_json_file(data_dir() + "/groups/" + e.file));
    if (generator_hash(f) != e.hash)
      throw InternalInconsistency("named group " + name + ": generator hash mismatch");
    if (f.expected_order && *f.expected_order != e.expected_order)
      throw InternalInconsistency("named group " + name + ": file and registry orders differ");
    f.expected_order = e.expected_order;
    return f.group();
  }
  throw InputError("unknown named group '" + name + "'");
}

MatrixGroup load_matrix_group(const std::string& name) {
  const std::string path = data_dir() + "/matrices/" + name + ".json";
  if (!std::filesystem::exists(path))
    throw InputError("no shipped matrix data for '" + name + "'");
  MatrixGroup mg = MatrixGroup::from_json(read_json_file(path));
  if (mg.name != name)
    throw InternalInconsistency("matrix data " + path + " names " + mg.name);
  return mg;
}

MatrixGroup matrix_group(Family f, unsigned n, std::uint64_t q) {
  const std::string name = matrix_group_name(f, n, q);
  if (std::filesystem::exists(data_dir() + "/matrices/" + name + ".json"))
    return load_matrix_group(name);
  MatrixGroup mg = construct_classical(f, n, q);
  mg.provenance += " (constructed at run time)";
  return mg;
}

} // namespace picky::zoo
