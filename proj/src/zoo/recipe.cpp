#include "picky/zoo/recipe.hpp"

#include <cctype>

#include "picky/errors.hpp"
#include "picky/genfile.hpp"
#include "picky/zoo/basic.hpp"
#include "picky/zoo/named.hpp"

namespace picky::zoo {

namespace {

struct Node {
  std::string name;
  std::vector<Node> args;
  std::string action;
  bool call = false;
};

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  Node parse() {
    Node n = term();
    skip();
    if (pos_ != s_.size())
      error("trailing input");
    return n;
  }

private:
  [[noreturn]] void error(const std::string& what) const {
    throw InputError("recipe '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      error("expected a name");
    return s_.substr(start, pos_ - start);
  }
  Node term() {
    Node n;
    n.name = ident();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      n.call = true;
      ++pos_;
      for (;;) {
        n.args.push_back(term());
        skip();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        error("expected ',' or ')'");
      }
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '@') {
      ++pos_;
      n.action = ident();
    }
    return n;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string canonical(const Node& n) {
  std::string s = n.name;
  if (n.call) {
    s += "(";
    for (std::size_t i = 0; i < n.args.size(); ++i)
      s += (i ? "," : "") + canonical(n.args[i]);
    s += ")";
  }
  if (!n.action.empty())
    s += "@" + n.action;
  return s;
}

std::uint64_t number(const Node& n) {
  if (n.call || n.name.empty() ||
      !std::all_of(n.name.begin(), n.name.end(), [](char c) { return std::isdigit(c); }))
    throw InputError("recipe: expected a number, got '" + canonical(n) + "'");
  return std::stoull(n.name);
}

void arity(const Node& n, std::size_t k) {
  if (n.args.size() != k)
    throw InputError("recipe: " + n.name + " takes " + std::to_string(k) + " argument(s)");
}

BuiltGroup build(const Node& n);

BuiltGroup classical(const Node& n, const std::string& fam_name, bool projective_prefix) {
  const Family fam = parse_family(fam_name);
  unsigned dim;
  std::uint64_t q;
  if (fam == Family::Sz) {
    arity(n, 1);
    dim = 4;
    q = number(n.args[0]);
  } else {
    arity(n, 2);
    dim = static_cast<unsigned>(number(n.args[0]));
    q = number(n.args[1]);
  }
  const MatrixGroup mg = matrix_group(fam, dim, q);
  bool projective;
  if (n.action.empty())
    projective = projective_prefix || mg.central_scalars().size() == 1;
  else if (n.action == "projective")
    projective = true;
  else if (n.action == "vectors")
    projective = false;
  else
    throw InputError("recipe: unknown action '" + n.action + "'");
  if (projective_prefix && !projective)
    throw InputError("recipe: P-prefixed families act on projective points");
  auto vec = std::make_shared<const MatrixAction>(vector_action(mg));
  auto act = projective ? std::make_shared<const MatrixAction>(projective_action(mg)) : vec;
  return {act->group(), canonical(n),
          mg.name + (projective ? " on projective points" : " on vectors") + "; " +
              mg.provenance,
          act, vec};
}

BuiltGroup build(const Node& n) {
  const std::string& f = n.name;
  auto nums = [&] {
    std::vector<std::size_t> v;
    for (const Node& a : n.args)
      v.push_back(number(a));
    return v;
  };
  if (f == "Sym" || f == "Alt" || f == "Cyclic" || f == "Dihedral" || f == "AGL1") {
    arity(n, 1);
    const std::size_t k = number(n.args[0]);
    Group g = f == "Sym"      ? symmetric(k)
              : f == "Alt"    ? alternating(k)
              : f == "Cyclic" ? cyclic(k)
              : f == "AGL1"   ? affine_line(k)
                              : dihedral(k);
    return {g, canonical(n), "permutation construction"};
  }
  if (f == "Q8") {
    arity(n, 0);
    return {quaternion8(), "Q8", "regular representation"};
  }
  if (f == "Abelian") {
    if (n.args.empty())
      throw InputError("recipe: Abelian needs at least one order");
    return {abelian(nums()), canonical(n), "disjoint cycles"};
  }
  if (f == "Product") {
    if (n.args.size() < 2)
      throw InputError("recipe: Product needs at least two factors");
    BuiltGroup acc = build(n.args[0]);
    for (std::size_t i = 1; i < n.args.size(); ++i)
      acc.group = direct_product(acc.group, build(n.args[i]).group);
    return {acc.group, canonical(n), "direct product"};
  }
  if (f == "Wreath") {
    arity(n, 2);
    return {wreath(build(n.args[0]).group, build(n.args[1]).group), canonical(n),
            "imprimitive wreath product"};
  }
  if (f == "CentralQuotient") {
    arity(n, 1);
    BuiltGroup inner = build(n.args[0]);
    return {central_quotient(inner.group), canonical(n),
            "central quotient of " + inner.provenance};
  }
  for (const std::string fam : {"GL", "SL", "SU", "Sp", "SO", "SOplus", "SOminus", "Sz"}) {
    if (f == fam)
      return classical(n, fam, false);
    if (f == "P" + fam)
      return classical(n, fam, true);
  }
  if (n.call)
    throw InputError("recipe: unknown family '" + f + "'");
  for (const NamedEntry& e : named_registry())
    if (e.name == f)
      return {load_named(f), f, "registry file " + e.file};
  throw InputError("recipe: unknown group '" + f + "'");
}

} // namespace

BuiltGroup build_group(const std::string& recipe) {
  if (recipe.size() > 5 && recipe.substr(recipe.size() - 5) == ".json") {
    const GeneratorFile f = GeneratorFile::from_json(read_json_file(recipe));
    return {f.group(), recipe, f.provenance};
  }
  return build(Parser(recipe).parse());
}

} // namespace picky::zoo
