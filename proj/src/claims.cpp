#include "picky/claims.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <random>
#include <set>

#include "picky/chartab.hpp"
#include "picky/classes.hpp"
#include "picky/conjecture.hpp"
#include "picky/elements.hpp"
#include "picky/errors.hpp"
#include "picky/genfile.hpp"
#include "picky/subnorm.hpp"
#include "picky/sylow.hpp"
#include "picky/util.hpp"
#include "picky/zoo/named.hpp"
#include "picky/zoo/recipe.hpp"

namespace picky {

using nlohmann::json;

namespace {

const std::set<std::string> kinds{"subnormaliser", "almost_normal", "chartab", "conjecture",
                                  "mckay"};

struct Selected {
  std::optional<std::size_t> class_index;
  Perm rep;
  std::optional<std::vector<unsigned>> jordan;
};

bool is_nontrivial_p_element(const ConjugacyClass& c, std::uint64_t p) {
  return c.element_order > 1 && p_part(c.element_order, p) == c.element_order;
}

std::vector<unsigned> jordan_of(const json& sel) {
  return sel.at("jordan_type").get<std::vector<unsigned>>();
}

/// Draws elements of the vector action until a p-part has the requested
/// Jordan type.
Selected sample_jordan(const zoo::BuiltGroup& bg, std::uint64_t p, const json& sel,
                       std::uint64_t seed) {
  const zoo::MatrixAction& vec = *bg.vectors;
  const std::vector<unsigned> type = jordan_of(sel);
  std::mt19937_64 rng(sel.value("seed", seed));
  const std::uint64_t tries = sel.value("samples", std::uint64_t{1000});
  for (std::uint64_t i = 0; i < tries; ++i) {
    const Perm r = random_element(vec.group(), rng);
    const Perm u = p_parts(r, p).p_part;
    if (u.is_identity())
      continue;
    if (zoo::jordan_type(vec.matrix_group().field, vec.matrix_of(u)) != type)
      continue;
    const Perm x = bg.action == bg.vectors ? u : zoo::project_to(vec, *bg.action, u);
    return {std::nullopt, x, type};
  }
  throw InputError("claim: no element of the requested Jordan type in " +
                   std::to_string(tries) + " samples");
}

std::vector<Selected> select_classes(const zoo::BuiltGroup& bg, const ClassData& cd,
                                     std::uint64_t p, const json& sel,
                                     const Bounds& bounds) {
  std::vector<Selected> out;
  if (sel.contains("jordan_type")) {
    if (!bg.vectors)
      throw InputError("claim: jordan_type needs a classical group");
    const std::vector<unsigned> type = jordan_of(sel);
    const ClassData cd_vec(bg.vectors->group(), bounds);
    std::set<std::size_t> seen;
    for (std::size_t kv : zoo::unipotent_classes_of_type(*bg.vectors, cd_vec, type)) {
      const Perm u = cd_vec[kv].rep;
      const Perm x = bg.action == bg.vectors ? u : zoo::project_to(*bg.vectors, *bg.action, u);
      const std::size_t k = cd.class_of(x);
      if (seen.insert(k).second)
        out.push_back({k, cd[k].rep, type});
    }
    std::sort(out.begin(), out.end(),
              [](const Selected& a, const Selected& b) { return a.class_index < b.class_index; });
    return out;
  }
  for (std::size_t k = 0; k < cd.size(); ++k) {
    const ConjugacyClass& c = cd[k];
    if (!is_nontrivial_p_element(c, p))
      continue;
    if (sel.contains("element_order") && c.element_order != sel["element_order"].get<std::uint64_t>())
      continue;
    if (sel.contains("centralizer_order") &&
        c.centralizer_order != sel["centralizer_order"].get<std::uint64_t>())
      continue;
    out.push_back({k, c.rep, std::nullopt});
  }
  return out;
}

std::string hex_hash(const std::string& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(s.data(), s.size())));
  return buf;
}

json class_json(const Selected& s, const ClassData* cd) {
  json j{{"representative", s.rep.images()}, {"element_order", s.rep.order()}};
  j["class_index"] = s.class_index ? json(*s.class_index) : json(nullptr);
  if (s.class_index && cd)
    j["centralizer_order"] = (*cd)[*s.class_index].centralizer_order;
  if (s.jordan)
    j["jordan_type"] = *s.jordan;
  return j;
}

class Checker {
public:
  explicit Checker(json expect) : expect_(std::move(expect)) {}

  void require(const std::string& what, const json& observed, const json& expected) {
    if (observed != expected)
      failures_.push_back(what + ": observed " + observed.dump() + ", expected " + expected.dump());
  }
  /// Compares an observation with expect[key] when present.
  void check(const std::string& key, const json& observed) {
    if (expect_.contains(key))
      require(key, observed, expect_[key]);
    used_.insert(key);
  }
  void unknown_keys() {
    for (const auto& [k, v] : expect_.items())
      if (!used_.count(k))
        failures_.push_back("unknown expectation '" + k + "'");
  }
  const std::vector<std::string>& failures() const { return failures_; }
  const json& expect() const { return expect_; }

private:
  json expect_;
  std::set<std::string> used_;
  std::vector<std::string> failures_;
};

/// Same value at every selected class, or null when they differ.
json common(const std::vector<json>& v) {
  if (v.empty())
    return nullptr;
  for (const json& x : v)
    if (x != v.front())
      return nullptr;
  return v.front();
}

json run_subnormaliser(const Claim& c, const zoo::BuiltGroup& bg, const Bounds& bounds,
                       std::uint64_t seed, Checker& chk) {
  const Group& g = bg.group;
  const SylowSystem sys(g, c.p, bounds);
  const bool sampled = c.select.value("sample", false);
  std::optional<ClassData> cd;
  std::vector<Selected> sel;
  if (sampled) {
    if (!bg.vectors)
      throw InputError("claim: sampling needs a classical group");
    sel.push_back(sample_jordan(bg, c.p, c.select, seed));
  } else {
    cd.emplace(g, bounds);
    sel = select_classes(bg, *cd, c.p, c.select, bounds);
  }
  if (sel.empty())
    throw InputError("claim " + c.id + ": selection is empty");
  const bool agree = c.expect.contains("methods_agree");
  json rows = json::array();
  std::vector<json> subs, pickys, is_group, is_norm;
  std::set<std::uint64_t> picky_orders;
  bool all_agree = true;
  for (const Selected& s : sel) {
    const SubnormaliserResult r = subnormaliser(sys, s.rep);
    json row = class_json(s, cd ? &*cd : nullptr);
    row["sub_order"] = r.subgroup.order();
    row["picky"] = r.is_picky;
    row["sylows_containing"] = r.witness_count;
    if (agree) {
      const SubnormaliserResult f = subnormaliser_fusion(sys, s.rep, bounds);
      const bool same = same_group(f.subgroup, r.subgroup);
      row["fusion_agrees"] = same;
      all_agree = all_agree && same;
    }
    rows.push_back(row);
    subs.push_back(r.subgroup.order());
    pickys.push_back(r.is_picky);
    is_group.push_back(r.subgroup.order() == g.order());
    is_norm.push_back(r.subgroup.order() == sys.normalizer().order());
    if (r.is_picky)
      picky_orders.insert(s.rep.order());
  }
  chk.check("sub_order", common(subs));
  chk.check("picky", common(pickys));
  chk.check("sub_is_group", common(is_group));
  chk.check("sub_is_sylow_normalizer", common(is_norm));
  chk.check("picky_element_orders", json(picky_orders));
  chk.check("selected_classes", sel.size());
  if (agree)
    chk.check("methods_agree", all_agree);
  return json{{"sylow_order", sys.sylow().order()},
              {"sylow_normalizer_order", sys.normalizer().order()},
              {"sylow_count", sys.count()},
              {"sampled", sampled},
              {"classes", rows}};
}

json run_almost_normal(const Claim& c, const zoo::BuiltGroup& bg, const Bounds& bounds,
                       Checker& chk) {
  const Group& g = bg.group;
  const ClassData cd(g, bounds);
  const SylowSystem sys(g, c.p, bounds);
  const PickyReport rep = picky_classes(cd, sys, bounds);
  bool an = true;
  json rows = json::array();
  for (const PickyRow& r : rep.rows) {
    an = an && r.sub_order == g.order();
    rows.push_back({{"class_index", r.class_index},
                    {"element_order", r.element_order},
                    {"sub_order", r.sub_order},
                    {"picky", r.picky}});
  }
  if (an != almost_normal(g, c.p, bounds))
    throw InternalInconsistency("almost_normal disagrees with the class scan");
  const bool normal = sys.count() == 1;
  chk.check("almost_normal", an);
  chk.check("sylow_normal", normal);
  return json{{"sylow_order", sys.sylow().order()},
              {"sylow_count", sys.count()},
              {"almost_normal", an},
              {"sylow_normal", normal},
              {"classes", rows}};
}

json run_chartab(const Claim&, const zoo::BuiltGroup& bg, const Bounds& bounds, Checker& chk) {
  const ClassData cd(bg.group, bounds);
  const CharacterTable t = character_table(cd, bounds, bg.id);
  const TableVerification v = verify_table(t, &cd);
  std::vector<std::uint64_t> degrees;
  for (std::size_t r = 0; r < t.num_chars(); ++r)
    degrees.push_back(t.degree(r));
  chk.check("verified", v.ok());
  chk.check("num_classes", t.num_classes());
  chk.check("degrees", degrees);
  return json{{"num_classes", t.num_classes()},
              {"degrees", degrees},
              {"verification", v.to_json()},
              {"table_hash", hex_hash(t.to_json().dump())}};
}

json run_conjecture(const Claim& c, const zoo::BuiltGroup& bg, const Bounds& bounds,
                    Checker& chk) {
  const Level level = parse_level(c.expect.value("level", std::string("plus")));
  const ConjectureChecker cc(bg.group, c.p, bounds);
  const std::vector<Selected> sel = select_classes(bg, cc.classes(), c.p, c.select, bounds);
  if (sel.empty())
    throw InputError("claim " + c.id + ": selection is empty");
  json rows = json::array();
  std::vector<json> holds, basic, pickys;
  bool flip_invariant = true;
  for (const Selected& s : sel) {
    const ConjectureReport r = cc.check(*s.class_index, level);
    const ConjectureReport f = cc.check(*s.class_index, level, true);
    flip_invariant = flip_invariant && f.basic_holds == r.basic_holds &&
                     f.plus_holds == r.plus_holds;
    json row = r.to_json();
    if (s.jordan)
      row["class"]["jordan_type"] = *s.jordan;
    rows.push_back(row);
    holds.push_back(r.holds());
    basic.push_back(r.basic_holds);
    pickys.push_back(r.picky);
  }
  chk.check("level", level_name(level));
  chk.check("holds", common(holds));
  chk.check("basic_holds", common(basic));
  chk.check("picky", common(pickys));
  chk.check("alpha_sign_invariant", flip_invariant);
  chk.check("selected_classes", sel.size());
  return json{{"level", level_name(level)}, {"classes", rows}};
}

json run_mckay(const Claim& c, const zoo::BuiltGroup& bg, const Bounds& bounds, Checker& chk) {
  const McKayCount m = mckay_count(bg.group, c.p, bounds);
  chk.check("equal", m.equal());
  chk.check("count", m.group_count);
  return m.to_json();
}

} // namespace

Claim Claim::from_json(const json& j) {
  try {
    Claim c;
    c.id = j.at("id").get<std::string>();
    c.statement = j.at("statement").get<std::string>();
    c.kind = j.at("kind").get<std::string>();
    c.group = j.at("group").get<std::string>();
    if (!kinds.count(c.kind))
      throw InputError("claim " + c.id + ": unknown kind '" + c.kind + "'");
    if (c.kind != "chartab") {
      c.p = j.at("p").get<std::uint64_t>();
      if (!is_prime(c.p))
        throw InputError("claim " + c.id + ": p is not prime");
    }
    if (j.contains("select"))
      c.select = j["select"];
    if (j.contains("expect"))
      c.expect = j["expect"];
    if (!c.select.is_object() || !c.expect.is_object())
      throw InputError("claim " + c.id + ": select and expect must be objects");
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("claim: ") + e.what());
  }
}

json Claim::to_json() const {
  json j{{"schema_version", 1}, {"id", id},         {"statement", statement},
         {"kind", kind},        {"group", group}};
  if (kind != "chartab")
    j["p"] = p;
  j["select"] = select;
  j["expect"] = expect;
  return j;
}

std::string default_claims_dir() { return zoo::data_dir() + "/claims"; }

std::vector<Claim> load_claims(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw InputError("claims directory not found: " + dir);
  std::vector<Claim> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() != ".json")
      continue;
    Claim c = Claim::from_json(read_json_file(e.path().string()));
    if (c.id != e.path().stem().string())
      throw InputError("claim id '" + c.id + "' does not match file " + e.path().string());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return out;
}

Claim find_claim(const std::vector<Claim>& claims, const std::string& id) {
  for (const Claim& c : claims)
    if (c.id == id)
      return c;
  throw InputError("unknown claim '" + id + "'");
}

json reproduce_claim(const Claim& c, const Bounds& bounds, std::uint64_t seed) {
  json doc{{"schema_version", 1}, {"claim", c.id},  {"statement", c.statement},
           {"kind", c.kind},      {"group", c.group}};
  if (c.kind != "chartab")
    doc["p"] = c.p;
  doc["expected"] = c.expect;
  Checker chk(c.expect);
  try {
    const zoo::BuiltGroup bg = zoo::build_group(c.group);
    doc["group_order"] = bg.group.order();
    doc["group_degree"] = bg.group.degree();
    doc["group_provenance"] = bg.provenance;
    json obs;
    if (c.kind == "subnormaliser")
      obs = run_subnormaliser(c, bg, bounds, seed, chk);
    else if (c.kind == "almost_normal")
      obs = run_almost_normal(c, bg, bounds, chk);
    else if (c.kind == "chartab")
      obs = run_chartab(c, bg, bounds, chk);
    else if (c.kind == "conjecture")
      obs = run_conjecture(c, bg, bounds, chk);
    else
      obs = run_mckay(c, bg, bounds, chk);
    chk.unknown_keys();
    doc["observed"] = obs;
    doc["failures"] = chk.failures();
    doc["status"] = chk.failures().empty() ? "pass" : "fail";
  } catch (const BoundExceeded& e) {
    doc["failures"] = json::array({std::string("bound exceeded: ") + e.what()});
    doc["status"] = "skipped (bound)";
  }
  return doc;
}

} // namespace picky
