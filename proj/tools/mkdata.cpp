// Regenerates the shipped data files: matrix generators and named groups.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "picky/errors.hpp"
#include "picky/genfile.hpp"
#include "picky/zoo/basic.hpp"
#include "picky/zoo/construct.hpp"
#include "picky/zoo/named.hpp"

using namespace picky;
using namespace picky::zoo;
using nlohmann::json;

namespace {

struct MatrixSpec {
  Family f;
  unsigned n;
  std::uint64_t q;
};

const std::vector<MatrixSpec> kMatrixGroups{
    {Family::SL, 2, 3},      {Family::SL, 2, 5},      {Family::SL, 2, 7},
    {Family::SL, 2, 8},      {Family::SL, 3, 2},      {Family::SL, 3, 3},
    {Family::SL, 3, 4},      {Family::GL, 2, 5},      {Family::SU, 3, 3},
    {Family::SU, 3, 5},      {Family::SU, 4, 2},      {Family::SU, 5, 2},
    {Family::Sp, 4, 3},      {Family::Sp, 6, 2},      {Family::SO, 3, 5},
    {Family::SOplus, 4, 3},  {Family::SOminus, 4, 3}, {Family::Sz, 4, 8}};

GeneratorFile from_group(const Group& g, const std::string& provenance) {
  return {g.degree(), g.generators(), provenance, g.order()};
}

GeneratorFile projective_file(Family f, unsigned n, std::uint64_t q, const std::string& what) {
  const MatrixGroup mg = construct_classical(f, n, q);
  const MatrixAction a = projective_action(mg);
  return from_group(a.group(), what + ": " + mg.name + " on projective points; " + mg.provenance);
}

GeneratorFile mathieu12() {
  // 11-cycle, a 4-cycle pair and an involution fixing no point (0-based)
  const std::size_t n = 12;
  std::vector<std::vector<Point>> c1{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};
  std::vector<std::vector<Point>> c2{{2, 6, 10, 7}, {3, 9, 4, 5}};
  std::vector<std::vector<Point>> c3{{0, 11}, {1, 10}, {2, 5}, {3, 7}, {4, 8}, {6, 9}};
  const Group g = Group::generated(
      n, {Perm::from_cycles(n, c1), Perm::from_cycles(n, c2), Perm::from_cycles(n, c3)});
  // sharply 5-transitive: basic orbit lengths 12, 11, 10, 9, 8
  const auto& ch = g.chain();
  std::vector<std::size_t> lens;
  for (std::size_t l = 0; l < ch.base().size(); ++l)
    lens.push_back(ch.orbit(l).size());
  if (lens != std::vector<std::size_t>{12, 11, 10, 9, 8})
    throw InternalInconsistency("M12 generators are not sharply 5-transitive");
  return from_group(g, "Mathieu group M12 on 12 points from the classical generators "
                       "(1..11), (3,7,11,8)(4,10,5,6), (1,12)(2,11)(3,6)(4,8)(5,9)(7,10); "
                       "checked sharply 5-transitive");
}

int run(const std::string& out_dir, bool check) {
  int mismatches = 0;
  auto emit = [&](const std::string& path, const json& j) {
    const std::string full = out_dir + "/" + path;
    if (check) {
      if (!std::filesystem::exists(full) || read_json_file(full) != j) {
        std::cout << "DIFFERS " << path << "\n";
        ++mismatches;
      } else {
        std::cout << "same    " << path << "\n";
      }
      return;
    }
    std::filesystem::create_directories(std::filesystem::path(full).parent_path());
    write_json_file(full, j);
    std::cout << "wrote   " << path << "\n";
  };

  for (const MatrixSpec& s : kMatrixGroups) {
    const MatrixGroup mg = construct_classical(s.f, s.n, s.q);
    vector_action(mg);
    emit("matrices/" + mg.name + ".json", mg.to_json());
  }

  struct Named {
    std::string name;
    GeneratorFile file;
    std::string caveat;
  };
  std::vector<Named> named{
      {"M12", mathieu12(), "identity pinned by order 95040 and sharp 5-transitivity"},
      {"PSL3_3", projective_file(Family::SL, 3, 3, "PSL(3,3)"), ""},
      {"PSL2_8", projective_file(Family::SL, 2, 8, "PSL(2,8)"), ""},
      {"SmallGroup_324_37",
       from_group(affine_3_cubed_a4(),
                  "F_3^3 split by A_4 (monomial: sign changes of determinant 1 and the "
                  "cyclic coordinate shift), affine action on 27 points"),
       "small-groups library id not re-checked; structure 3^3.A4 with a faithful "
       "irreducible A4-module"}};
  json reg = json::array();
  for (const Named& n : named) {
    emit("groups/" + n.name + ".json", n.file.to_json());
    reg.push_back({{"name", n.name},
                   {"file", n.name + ".json"},
                   {"expected_order", *n.file.expected_order},
                   {"hash", generator_hash(n.file)},
                   {"caveat", n.caveat}});
  }
  emit("groups/registry.json", json{{"schema_version", 1}, {"groups", reg}});
  return mismatches ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate shipped group data"};
  std::string out = data_dir();
  bool check = false;
  app.add_option("--out", out, "data directory to write");
  app.add_flag("--check", check, "compare with the files instead of writing");
  CLI11_PARSE(app, argc, argv);
  try {
    return run(out, check);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
