// One PASS/FAIL line per acceptance criterion.
//   acceptance [--criterion N] [--cli PATH]
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "picky/chartab.hpp"
#include "picky/claims.hpp"
#include "picky/classes.hpp"
#include "picky/conjecture.hpp"
#include "picky/errors.hpp"
#include "picky/genfile.hpp"
#include "picky/properties.hpp"
#include "picky/subnorm.hpp"
#include "picky/util.hpp"
#include "picky/zoo/named.hpp"
#include "picky/zoo/recipe.hpp"

using namespace picky;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

json corpus() { return read_json_file(zoo::data_dir() + "/corpus.json"); }

std::vector<std::string> corpus_groups() {
  return corpus().at("groups").get<std::vector<std::string>>();
}

/// Runs the named claims; all must pass.
Outcome claims(const std::vector<std::string>& ids) {
  const std::vector<Claim> all = load_claims(default_claims_dir());
  Outcome o{true, ""};
  for (const std::string& id : ids) {
    const json doc = reproduce_claim(find_claim(all, id));
    const std::string status = doc["status"];
    o.detail += (o.detail.empty() ? "" : "; ") + id + " " + status;
    if (status != "pass") {
      o.pass = false;
      for (const json& f : doc["failures"])
        o.detail += " [" + f.get<std::string>() + "]";
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  std::size_t groups = 0, classes = 0, disagreements = 0;
  std::uint64_t largest = 0;
  for (const std::string& r : corpus_groups()) {
    const Group g = zoo::build_group(r).group;
    if (g.order() > 2000)
      return {false, r + " exceeds order 2000"};
    largest = std::max(largest, g.order());
    ++groups;
    for (std::uint64_t p : prime_divisors(g.order())) {
      const PickyReport rep = picky_classes(g, p, {}, true);
      for (const PickyRow& row : rep.rows) {
        ++classes;
        if (!row.methods_agree || row.methods.size() != 3)
          ++disagreements;
      }
    }
  }
  std::ostringstream s;
  s << groups << " groups (largest order " << largest << "), " << classes
    << " p-classes, " << disagreements << " disagreements";
  return {groups >= 20 && disagreements == 0, s.str()};
}

Outcome property_suite() {
  PropertyReport total;
  for (const std::string& r : corpus_groups()) {
    const Group g = zoo::build_group(r).group;
    for (std::uint64_t p : prime_divisors(g.order()))
      total.merge(check_subnormaliser_properties(g, p));
  }
  const json products = corpus().at("products");
  for (const json& pair : products) {
    const Group a = zoo::build_group(pair[0]).group, b = zoo::build_group(pair[1]).group;
    for (std::uint64_t p : prime_divisors(a.order() * b.order()))
      total.merge(check_product_property(a, b, p));
  }
  std::ostringstream s;
  bool pass = total.ok();
  for (const PropertyTally& t : total.tallies) {
    s << t.name << " " << t.checks - t.failures << "/" << t.checks << "; ";
    if (t.checks == 0)
      pass = false;
  }
  for (const PropertyTally& t : total.tallies)
    for (const std::string& e : t.examples)
      s << "FAIL " << t.name << " at " << e << "; ";
  return {pass && total.tallies.size() >= 14, s.str()};
}

const std::vector<std::string> table_extras{"Sz(8)", "Sp(4,3)", "SU(3,3)", "PSL2_8"};

Outcome table_engine() {
  std::vector<std::string> groups = corpus_groups();
  groups.insert(groups.end(), table_extras.begin(), table_extras.end());
  std::size_t verified = 0;
  std::string failed;
  for (const std::string& r : groups) {
    const ClassData cd(zoo::build_group(r).group);
    const CharacterTable t = character_table(cd);
    const TableVerification v = verify_table(t, &cd);
    const bool all = v.ok() && v.degrees_ok && v.sum_of_squares_ok && v.row_orthogonality_ok &&
                     v.column_orthogonality_ok && v.galois_ok && v.power_maps_ok;
    if (all)
      ++verified;
    else
      failed += " " + r + ": " + v.first_failure;
  }
  return {failed.empty(), std::to_string(verified) + "/" + std::to_string(groups.size()) +
                              " tables verified" + failed};
}

Outcome mckay() {
  std::vector<std::string> groups = corpus_groups();
  groups.insert(groups.end(), table_extras.begin(), table_extras.end());
  std::size_t checks = 0;
  std::string failed;
  for (const std::string& r : groups) {
    const Group g = zoo::build_group(r).group;
    for (std::uint64_t p : prime_divisors(g.order())) {
      const McKayCount m = mckay_count(g, p);
      ++checks;
      if (!m.equal())
        failed += " " + r + " p=" + std::to_string(p) + " " + std::to_string(m.group_count) +
                  " vs " + std::to_string(m.normalizer_count);
    }
  }
  return {failed.empty(), std::to_string(checks) + " (group, prime) pairs" + failed};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  if (cli.empty())
    return {false, "no CLI path given"};
  const fs::path base = fs::temp_directory_path() / "picky-acceptance";
  fs::remove_all(base);
  const fs::path a = base / "run1", b = base / "run2";
  for (const auto& [dir, jobs] : {std::pair{a, 1}, std::pair{b, 4}}) {
    const std::string cmd = "\"" + cli + "\" reproduce --all --out \"" + dir.string() +
                            "\" --jobs " + std::to_string(jobs) + " > /dev/null 2>&1";
    if (const int rc = std::system(cmd.c_str()); rc != 0)
      return {false, "reproduce exited with status " + std::to_string(rc)};
  }
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    const fs::path other = b / e.path().filename();
    if (!fs::exists(other) || slurp(e.path()) != slurp(other))
      return {false, e.path().filename().string() + " differs"};
    ++files;
  }
  std::size_t files_b = std::distance(fs::directory_iterator(b), fs::directory_iterator{});
  fs::remove_all(base);
  return {files > 0 && files == files_b,
          std::to_string(files) + " result documents byte-identical across two runs"};
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::string cli;
  app.add_option("--criterion", only, "run a single criterion");
  app.add_option("--cli", cli, "path of the picky executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "three subnormaliser methods agree on the corpus", 300, oracle_equivalence},
      {2, "subnormaliser property suite on the corpus", 600, property_suite},
      {3, "PSL(3,3) regular unipotent and M12 order-3 subnormalisers", 120,
       [] { return claims({"PSL3_3-regular-unipotent-picky", "M12-sub-whole-group"}); }},
      {4, "picky p-elements of Sz(8), SU(3,3) and SU(5,2)", 600,
       [] {
         return claims(
             {"Sz8-2-elements-picky", "SU3_3-3-elements-picky", "SU5_2-jordan-41-picky"});
       }},
      {5, "almost normal Sylow subgroups", 300,
       [] {
         return claims({"PSU3_5-almost-normal-p3", "SmallGroup_324_37-almost-normal-p2"});
       }},
      {6, "picky 3-elements of SL(3,4), SU(4,2), Sp(6,2)", 1800,
       [] { return claims({"SL3_4-order3-picky", "SU4_2-picky-order9", "Sp6_2-order9-picky"}); }},
      {7, "character tables verify exactly", 900, table_engine},
      {8, "refined conjecture holds on four instances", 900,
       [] {
         return claims({"conjecture-sz8-p2", "conjecture-sp4_3-regular-unipotent",
                        "conjecture-psl2_8-p3", "conjecture-gl2_5-regular-unipotent"});
       }},
      {9, "McKay counts agree", 900, mckay},
      {10, "reproduce --all is deterministic", 1800, [&] { return determinism(cli); }},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    if (only && c.id != only)
      continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %d: %s  %s (%.1f s) %s\n", c.id, o.pass ? "PASS" : "FAIL",
                c.name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
