#include "picky/genfile.hpp"

#include <fstream>

#include "picky/errors.hpp"

namespace picky {

using nlohmann::json;

namespace {

std::vector<Perm> checked_perms(const std::vector<std::vector<Point>>& gens, std::size_t degree) {
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != degree)
      throw InputError("generator " + std::to_string(i) + " has length " +
                       std::to_string(gens[i].size()) + ", expected " + std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (Point x : gens[i]) {
      if (x >= degree || seen[x])
        throw InputError("generator " + std::to_string(i) + " is not a bijection");
      seen[x] = true;
    }
    perms.emplace_back(gens[i]);
  }
  return perms;
}

} // namespace

json GeneratorFile::to_json() const {
  json gens = json::array();
  for (const Perm& g : generators)
    gens.push_back(g.images());
  json j{{"schema_version", 1}, {"degree", degree}, {"generators", gens},
         {"provenance", provenance}};
  if (expected_order)
    j["expected_order"] = *expected_order;
  return j;
}

GeneratorFile GeneratorFile::from_json(const json& j) {
  try {
    GeneratorFile f;
    f.degree = j.at("degree").get<std::size_t>();
    const auto raw = j.at("generators").get<std::vector<std::vector<Point>>>();
    f.generators = checked_perms(raw, f.degree);
    f.provenance = j.value("provenance", "");
    if (j.contains("expected_order"))
      f.expected_order = j.at("expected_order").get<std::uint64_t>();
    return f;
  } catch (const json::exception& e) {
    throw InputError(std::string("generator file: malformed JSON: ") + e.what());
  }
}

Group GeneratorFile::group() const {
  Group g = Group::generated(degree, generators);
  if (expected_order && g.order() != *expected_order)
    throw InternalInconsistency("generator file: group order " + std::to_string(g.order()) +
                                " differs from expected " + std::to_string(*expected_order));
  return g;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write " + path);
  out << j.dump(1) << "\n";
}

} // namespace picky
