// Command-line front end: every command prints a versioned JSON document.
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "picky/chartab.hpp"
#include "picky/claims.hpp"
#include "picky/classes.hpp"
#include "picky/conjecture.hpp"
#include "picky/errors.hpp"
#include "picky/genfile.hpp"
#include "picky/subnorm.hpp"
#include "picky/sylow.hpp"
#include "picky/util.hpp"
#include "picky/zoo/recipe.hpp"

using namespace picky;
using nlohmann::json;

namespace {

enum Exit { ok = 0, failed = 1, bound = 2, input = 3 };

struct RunConfig {
  Bounds bounds;
  std::uint64_t seed = 1;
  std::string out_dir = "results";
  unsigned jobs = 1;
  bool text = false;

  void validate() const {
    for (std::uint64_t v : {bounds.enumeration, bounds.brute_force, bounds.fusion_scan,
                            bounds.conjugate_scan, bounds.class_count, bounds.dixon_prime_search,
                            bounds.character_table_order, bounds.exhaustive_oracle})
      if (v == 0)
        throw InputError("bounds must be positive");
    if (jobs == 0)
      throw InputError("--jobs must be positive");
  }
};

void add_bounds(CLI::App& app, RunConfig& cfg) {
  Bounds& b = cfg.bounds;
  app.add_option("--enumeration-bound", b.enumeration, "largest group order enumerated");
  app.add_option("--brute-force-bound", b.brute_force, "largest order for the definitional scan");
  app.add_option("--fusion-scan-bound", b.fusion_scan, "largest order for the element fusion scan");
  app.add_option("--conjugate-scan-bound", b.conjugate_scan, "most Sylow conjugates iterated");
  app.add_option("--oracle-bound", b.exhaustive_oracle, "largest order cross-checked by scans");
  app.add_option("--class-count-bound", b.class_count, "most classes for character tables");
  app.add_option("--table-order-bound", b.character_table_order,
                 "largest order for character tables");
  app.add_option("--dixon-search-bound", b.dixon_prime_search, "largest Dixon prime tried");
  app.add_option("--seed", cfg.seed, "seed for sampling");
  app.add_flag("--text", cfg.text, "human-readable output instead of JSON");
}

json header(const std::string& command) {
  return json{{"schema_version", 1}, {"command", command}};
}

json group_json(const zoo::BuiltGroup& bg) {
  return json{{"id", bg.id},
              {"provenance", bg.provenance},
              {"order", bg.group.order()},
              {"degree", bg.group.degree()}};
}

void emit(const json& doc, const RunConfig& cfg, const std::function<void()>& text) {
  if (cfg.text)
    text();
  else
    std::cout << doc.dump(1) << "\n";
}

std::size_t parse_class(const ClassData& cd, const std::string& spec) {
  std::size_t k;
  try {
    std::size_t used = 0;
    k = std::stoull(spec, &used);
    if (used != spec.size())
      throw InputError("");
  } catch (...) {
    throw InputError("--class expects a class index, got '" + spec + "'");
  }
  if (k >= cd.size())
    throw InputError("class index " + spec + " out of range (" + std::to_string(cd.size()) +
                     " classes)");
  return k;
}

json classes_json(const ClassData& cd) {
  json rows = json::array();
  for (std::size_t k = 0; k < cd.size(); ++k)
    rows.push_back({{"index", k},
                    {"element_order", cd[k].element_order},
                    {"size", cd[k].size},
                    {"centralizer_order", cd[k].centralizer_order},
                    {"representative", cd[k].rep.images()}});
  return rows;
}

int cmd_group(const std::string& recipe, const RunConfig& cfg) {
  const zoo::BuiltGroup bg = zoo::build_group(recipe);
  json doc = header("group");
  doc["group"] = group_json(bg);
  std::optional<ClassData> cd;
  if (bg.group.order() <= cfg.bounds.enumeration) {
    cd.emplace(bg.group, cfg.bounds);
    doc["exponent"] = cd->exponent();
    doc["classes"] = classes_json(*cd);
  } else {
    doc["classes"] = nullptr;
  }
  emit(doc, cfg, [&] {
    std::cout << bg.id << ": order " << bg.group.order() << ", degree " << bg.group.degree();
    if (cd)
      std::cout << ", " << cd->size() << " classes, exponent " << cd->exponent();
    std::cout << "\n";
  });
  return ok;
}

int cmd_sylow(const std::string& recipe, std::uint64_t p, const RunConfig& cfg) {
  const zoo::BuiltGroup bg = zoo::build_group(recipe);
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  const SylowSystem sys(bg.group, p, cfg.bounds);
  json doc = header("sylow");
  doc["group"] = group_json(bg);
  doc["p"] = p;
  doc["sylow_order"] = sys.sylow().order();
  doc["sylow_count"] = sys.count();
  doc["normalizer_order"] = sys.normalizer().order();
  json gens = json::array();
  for (const Perm& g : sys.sylow().generators())
    gens.push_back(g.images());
  doc["sylow_generators"] = gens;
  emit(doc, cfg, [&] {
    std::cout << "|P| = " << sys.sylow().order() << ", n_" << p << " = " << sys.count()
              << ", |N_G(P)| = " << sys.normalizer().order() << "\n";
  });
  return ok;
}

json picky_row_json(const PickyRow& r) {
  json methods = json::array();
  for (SubMethod m : r.methods)
    methods.push_back(method_name(m));
  return json{{"class_index", r.class_index},
              {"element_order", r.element_order},
              {"class_size", r.class_size},
              {"centralizer_order", r.centralizer_order},
              {"representative", r.rep.images()},
              {"sylows_containing", r.sylows_containing},
              {"picky", r.picky},
              {"sub_order", r.sub_order},
              {"methods", methods},
              {"methods_agree", r.methods_agree}};
}

int cmd_picky(const std::string& recipe, std::uint64_t p, bool brute, const RunConfig& cfg) {
  const zoo::BuiltGroup bg = zoo::build_group(recipe);
  const PickyReport rep = picky_classes(bg.group, p, cfg.bounds, brute);
  json doc = header("picky");
  doc["group"] = group_json(bg);
  doc["p"] = p;
  doc["sylow_order"] = rep.sylow_order;
  doc["sylow_count"] = rep.sylow_count;
  doc["sylow_normalizer_order"] = rep.sylow_normalizer_order;
  json rows = json::array();
  bool agree = true;
  for (const PickyRow& r : rep.rows) {
    rows.push_back(picky_row_json(r));
    agree = agree && r.methods_agree;
  }
  doc["classes"] = rows;
  emit(doc, cfg, [&] {
    for (const PickyRow& r : rep.rows)
      std::cout << "class " << r.class_index << " order " << r.element_order << " |C| "
                << r.centralizer_order << " Sub " << r.sub_order
                << (r.picky ? " picky" : "") << "\n";
  });
  return agree ? ok : failed;
}

int cmd_subnorm(const std::string& recipe, std::uint64_t p, const std::string& cls,
                const std::string& method, const RunConfig& cfg) {
  const zoo::BuiltGroup bg = zoo::build_group(recipe);
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  const ClassData cd(bg.group, cfg.bounds);
  const std::size_t k = parse_class(cd, cls);
  const Perm& x = cd[k].rep;
  require_p_element(bg.group, p, x);
  std::vector<SubMethod> methods;
  if (method == "all")
    methods = {SubMethod::generation, SubMethod::fusion, SubMethod::bruteforce};
  else if (method == "gen")
    methods = {SubMethod::generation};
  else if (method == "fusion")
    methods = {SubMethod::fusion};
  else if (method == "brute")
    methods = {SubMethod::bruteforce};
  else
    throw InputError("--method must be gen, fusion, brute or all");
  const SylowSystem sys(bg.group, p, cfg.bounds);
  std::vector<SubnormaliserResult> res;
  for (SubMethod m : methods) {
    if (m == SubMethod::generation)
      res.push_back(subnormaliser(sys, x));
    else if (m == SubMethod::fusion)
      res.push_back(subnormaliser_fusion(sys, x, cfg.bounds));
    else
      res.push_back(subnormaliser_bruteforce(bg.group, p, x, cfg.bounds));
  }
  bool agree = true;
  json out = json::array();
  for (const SubnormaliserResult& r : res) {
    agree = agree && same_group(r.subgroup, res.front().subgroup);
    json gens = json::array();
    for (const Perm& g : r.subgroup.generators())
      gens.push_back(g.images());
    out.push_back({{"method", method_name(r.method)},
                   {"order", r.subgroup.order()},
                   {"picky", r.is_picky},
                   {"witness_count", r.witness_count},
                   {"generators", gens}});
  }
  json doc = header("subnorm");
  doc["group"] = group_json(bg);
  doc["p"] = p;
  doc["class"] = {{"index", k},
                  {"element_order", cd[k].element_order},
                  {"centralizer_order", cd[k].centralizer_order},
                  {"representative", x.images()}};
  doc["results"] = out;
  doc["methods_agree"] = agree;
  emit(doc, cfg, [&] {
    for (const SubnormaliserResult& r : res)
      std::cout << method_name(r.method) << ": |Sub| = " << r.subgroup.order()
                << (r.is_picky ? " (picky)" : "") << "\n";
    std::cout << (agree ? "methods agree" : "METHODS DISAGREE") << "\n";
  });
  return agree ? ok : failed;
}

int cmd_chartab(const std::string& recipe, const std::string& export_path,
                const std::string& verify_path, bool full, const RunConfig& cfg) {
  json doc = header("chartab");
  std::optional<CharacterTable> table;
  std::optional<ClassData> cd;
  if (!recipe.empty()) {
    const zoo::BuiltGroup bg = zoo::build_group(recipe);
    doc["group"] = group_json(bg);
    cd.emplace(bg.group, cfg.bounds);
  }
  if (!verify_path.empty()) {
    table = CharacterTable::from_json(read_json_file(verify_path));
    doc["source"] = verify_path;
  } else {
    if (!cd)
      throw InputError("chartab needs a group or --verify <file>");
    table = character_table(*cd, cfg.bounds, doc["group"]["id"].get<std::string>());
  }
  if (cd && table->num_classes() != cd->size())
    throw InputError("table has " + std::to_string(table->num_classes()) +
                     " classes, the group has " + std::to_string(cd->size()));
  const TableVerification v = verify_table(*table, cd ? &*cd : nullptr);
  std::vector<std::uint64_t> degrees;
  for (std::size_t r = 0; r < table->num_chars(); ++r)
    degrees.push_back(table->degree(r));
  doc["num_classes"] = table->num_classes();
  doc["degrees"] = degrees;
  doc["verification"] = v.to_json();
  if (full)
    doc["table"] = table->to_json();
  if (!export_path.empty()) {
    write_json_file(export_path, table->to_json());
    doc["exported"] = export_path;
  }
  emit(doc, cfg, [&] {
    std::cout << table->num_classes() << " classes; degrees";
    for (auto d : degrees)
      std::cout << " " << d;
    std::cout << "\n" << (v.ok() ? "verified" : "FAILED: " + v.first_failure) << "\n";
  });
  return v.ok() ? ok : failed;
}

int cmd_conjecture(const std::string& recipe, std::uint64_t p, const std::string& cls,
                   const std::string& level_s, bool flip, const RunConfig& cfg) {
  const zoo::BuiltGroup bg = zoo::build_group(recipe);
  const Level level = parse_level(level_s);
  const ConjectureChecker cc(bg.group, p, cfg.bounds);
  std::vector<std::size_t> ks;
  if (cls.empty() || cls == "all") {
    for (std::size_t k = 0; k < cc.classes().size(); ++k) {
      const auto o = cc.classes()[k].element_order;
      if (o > 1 && p_part(o, p) == o)
        ks.push_back(k);
    }
  } else {
    ks.push_back(parse_class(cc.classes(), cls));
  }
  json reports = json::array();
  std::vector<ConjectureReport> reps;
  for (std::size_t k : ks) {
    reps.push_back(cc.check(k, level, flip));
    reports.push_back(reps.back().to_json());
  }
  json doc = header("conjecture");
  doc["group"] = group_json(bg);
  doc["p"] = p;
  doc["level"] = level_name(level);
  doc["reports"] = reports;
  emit(doc, cfg, [&] {
    for (const ConjectureReport& r : reps)
      std::cout << "class " << r.class_index << " order " << r.element_order << " |Sub| "
                << r.sub_order << " |Irr^x| " << r.tags_group.size() << "/"
                << r.tags_sub.size() << " " << level_name(level) << ": "
                << (r.holds() ? "holds" : "fails") << "\n";
  });
  return ok;
}

int cmd_reproduce(const std::vector<std::string>& ids, bool all, const std::string& claims_dir,
                  const RunConfig& cfg) {
  const std::vector<Claim> claims = load_claims(claims_dir);
  std::vector<Claim> todo;
  if (all)
    todo = claims;
  else if (ids.empty())
    throw InputError("reproduce needs --claim <id> or --all");
  else
    for (const std::string& id : ids)
      todo.push_back(find_claim(claims, id));
  std::filesystem::create_directories(cfg.out_dir);

  std::vector<json> docs(todo.size());
  std::vector<std::string> errors(todo.size());
  std::atomic<std::size_t> next{0};
  std::mutex log;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) {
      try {
        docs[i] = reproduce_claim(todo[i], cfg.bounds, cfg.seed);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
      std::lock_guard<std::mutex> lk(log);
      std::cerr << todo[i].id << ": "
                << (errors[i].empty() ? docs[i]["status"].get<std::string>()
                                      : "error: " + errors[i])
                << "\n";
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(cfg.jobs, todo.size()); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();

  int code = ok;
  json summary = json::array();
  for (std::size_t i = 0; i < todo.size(); ++i) {
    std::string status;
    if (!errors[i].empty()) {
      status = "error";
      code = failed;
    } else {
      status = docs[i]["status"];
      write_json_file((std::filesystem::path(cfg.out_dir) / (todo[i].id + ".json")).string(),
                      docs[i]);
      if (status == "fail")
        code = failed;
      else if (status != "pass" && code == ok)
        code = bound;
    }
    summary.push_back({{"claim", todo[i].id}, {"status", status}});
  }
  json doc = header("reproduce");
  doc["out_dir"] = cfg.out_dir;
  doc["claims"] = summary;
  emit(doc, cfg, [&] {
    for (const json& s : summary)
      std::cout << s["claim"].get<std::string>() << ": " << s["status"].get<std::string>()
                << "\n";
  });
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow subnormalisers, picky elements and character tables"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string recipe, cls, method = "gen", level = "plus", export_path, verify_path;
  std::string claims_dir;
  std::vector<std::string> claim_ids;
  std::uint64_t p = 0;
  bool brute = false, full = false, all = false, flip = false;

  auto add_group = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("group", recipe, "recipe, registry name or generator file");
    if (required)
      o->required();
  };
  auto add_p = [&](CLI::App* c) { c->add_option("-p,--prime", p, "prime")->required(); };

  auto* g = app.add_subcommand("group", "construct a group and list its classes");
  add_group(g);
  auto* sy = app.add_subcommand("sylow", "Sylow subgroup, count and normaliser");
  add_group(sy);
  add_p(sy);
  auto* pk = app.add_subcommand("picky", "subnormalisers of all p-element classes");
  add_group(pk);
  add_p(pk);
  pk->add_flag("--brute", brute, "also run the definitional scan");
  auto* sn = app.add_subcommand("subnorm", "subnormaliser of one class");
  add_group(sn);
  add_p(sn);
  sn->add_option("--class", cls, "class index")->required();
  sn->add_option("--method", method, "gen, fusion, brute or all");
  auto* ct = app.add_subcommand("chartab", "character table");
  add_group(ct, false);
  ct->add_option("--export", export_path, "write the table to a file");
  ct->add_option("--verify", verify_path, "verify a table file instead of computing one");
  ct->add_flag("--full", full, "include the table in the output");
  auto* cj = app.add_subcommand("conjecture", "compare Irr^x of G and of Sub_G(x)");
  add_group(cj);
  add_p(cj);
  cj->add_option("--class", cls, "class index or 'all' (default all p-classes)");
  cj->add_option("--level", level, "basic or plus");
  cj->add_flag("--flip-alpha", flip, "negate the value p-part exponent");
  auto* rp = app.add_subcommand("reproduce", "rerun registered claims");
  rp->add_option("--claim", claim_ids, "claim id (repeatable)");
  rp->add_flag("--all", all, "every claim");
  rp->add_option("--claims-dir", claims_dir, "claim directory");
  rp->add_option("--out", cfg.out_dir, "directory for result documents");
  rp->add_option("--jobs", cfg.jobs, "claims run concurrently");
  for (auto* c : {g, sy, pk, sn, ct, cj, rp})
    add_bounds(*c, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input;
  }
  try {
    cfg.validate();
    if (*g)
      return cmd_group(recipe, cfg);
    if (*sy)
      return cmd_sylow(recipe, p, cfg);
    if (*pk)
      return cmd_picky(recipe, p, brute, cfg);
    if (*sn)
      return cmd_subnorm(recipe, p, cls, method, cfg);
    if (*ct)
      return cmd_chartab(recipe, export_path, verify_path, full, cfg);
    if (*cj)
      return cmd_conjecture(recipe, p, cls, level, flip, cfg);
    return cmd_reproduce(claim_ids, all, claims_dir.empty() ? default_claims_dir() : claims_dir,
                         cfg);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return bound;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input;
  } catch (const InternalInconsistency& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return failed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
}
