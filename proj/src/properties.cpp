#include "picky/properties.hpp"

#include <random>

#include "picky/backtrack.hpp"
#include "picky/classes.hpp"
#include "picky/elements.hpp"
#include "picky/quotient.hpp"
#include "picky/structure.hpp"
#include "picky/subnorm.hpp"
#include "picky/sylow.hpp"
#include "picky/util.hpp"
#include "picky/zoo/basic.hpp"

namespace picky {

using nlohmann::json;

bool PropertyReport::ok() const {
  for (const PropertyTally& t : tallies)
    if (t.failures)
      return false;
  return true;
}

std::uint64_t PropertyReport::checks() const {
  std::uint64_t n = 0;
  for (const PropertyTally& t : tallies)
    n += t.checks;
  return n;
}

PropertyTally& PropertyReport::tally(const std::string& name) {
  for (PropertyTally& t : tallies)
    if (t.name == name)
      return t;
  tallies.push_back({name, 0, 0, {}});
  return tallies.back();
}

const PropertyTally* PropertyReport::find(const std::string& name) const {
  for (const PropertyTally& t : tallies)
    if (t.name == name)
      return &t;
  return nullptr;
}

void PropertyReport::merge(const PropertyReport& other) {
  for (const PropertyTally& o : other.tallies) {
    PropertyTally& t = tally(o.name);
    t.checks += o.checks;
    t.failures += o.failures;
    for (const std::string& e : o.examples)
      if (t.examples.size() < 5)
        t.examples.push_back(e);
  }
}

json PropertyReport::to_json() const {
  json rows = json::array();
  for (const PropertyTally& t : tallies)
    rows.push_back(
        {{"name", t.name}, {"checks", t.checks}, {"failures", t.failures}, {"examples", t.examples}});
  return json{{"group_order", group_order}, {"p", p}, {"ok", ok()}, {"properties", rows}};
}

namespace {

void record(PropertyReport& r, const std::string& name, bool holds, const std::string& where) {
  PropertyTally& t = r.tally(name);
  ++t.checks;
  if (!holds) {
    ++t.failures;
    if (t.examples.size() < 5)
      t.examples.push_back(where);
  }
}

bool is_abelian(const Group& h) {
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

/// Radical p-subgroups R (R = O_p(N_G(R))) of G.
std::vector<Group> radical_subgroups(const Group& g, std::uint64_t p, std::uint64_t bound) {
  std::vector<Group> out;
  for (const Group& r : p_subgroups(g, p, bound))
    if (same_group(o_p(normalizer_backtrack(g, r), p), r))
      out.push_back(r);
  return out;
}

/// Checks Sub_{G/N}(xN) = Sub_G(x)N/N and that pickiness survives.
void check_quotient(PropertyReport& r, const std::string& name, const Group& g,
                    const Group& n, std::uint64_t p, const Perm& x, const Group& sub,
                    bool picky, const Bounds& bounds, const std::string& where) {
  const QuotientAction q(g, n);
  const Perm xb = q.project(x);
  const Group image = q.project(sub);
  if (xb.is_identity()) {
    record(r, name, same_group(image, q.image()), where);
    return;
  }
  const SubnormaliserResult sb = subnormaliser(q.image(), p, xb, bounds);
  record(r, name, same_group(sb.subgroup, image) && sb.is_picky == picky, where);
}

} // namespace

PropertyReport check_subnormaliser_properties(const Group& g, std::uint64_t p,
                                              const Bounds& bounds,
                                              const PropertyOptions& opt) {
  PropertyReport rep;
  rep.group_order = g.order();
  rep.p = p;
  const ClassData cd(g, bounds);
  const SylowSystem sys(g, p, bounds);
  const bool abelian_sylow = is_abelian(sys.sylow());
  const Group op = o_p(g, p);
  const Group z = center(g);
  const Group residual = o_p_prime_residual(g, p);
  const bool brute = g.order() <= bounds.brute_force;
  std::vector<Group> radicals;
  if (g.order() <= opt.radical_order)
    radicals = radical_subgroups(g, p, opt.radical_order);
  std::vector<Group> overs;
  if (g.order() <= opt.overgroup_order)
    overs = overgroups(g, sys.normalizer(), opt.overgroup_order);
  std::optional<ElementIndexer> all;
  if (g.order() <= opt.overgroup_order)
    all.emplace(g);
  std::mt19937_64 rng(opt.seed);

  for (std::size_t k = 0; k < cd.size(); ++k) {
    const ConjugacyClass& c = cd[k];
    if (c.element_order == 1 || p_part(c.element_order, p) != c.element_order)
      continue;
    const Perm& x = c.rep;
    const std::string where = "class " + std::to_string(k) + " p=" + std::to_string(p);
    const SubnormaliserResult gen = subnormaliser(sys, x);
    const Group& s = gen.subgroup;

    const SubnormaliserResult fus = subnormaliser_fusion(sys, x, bounds);
    bool agree = same_group(fus.subgroup, s);
    if (brute)
      agree = agree && same_group(subnormaliser_bruteforce(g, p, x, bounds).subgroup, s);
    record(rep, brute ? "three_methods_agree" : "generation_and_fusion_agree", agree, where);

    const Perm t = sys.conjugator_into(x);
    const Group nt = conjugate(sys.normalizer(), t);
    const Group cx = centralizer(g, x, bounds);
    record(rep, "sylow_normaliser_and_centraliser_inside", is_subgroup(nt, s) && is_subgroup(cx, s),
           where);

    const std::uint64_t containing = sylows_containing(sys, x).count_containing_x;
    const bool picky = containing == 1;
    record(rep, "picky_iff_sub_is_sylow_normaliser",
           gen.is_picky == picky && picky == same_group(s, nt), where);

    if (picky)
      record(rep, "picky_cyclic_normaliser_in_sylow_normaliser",
             is_subgroup(cyclic_normalizer(g, x), nt), where);

    if (abelian_sylow && is_abelian(cx))
      record(rep, "abelian_sylow_and_centraliser_give_picky", picky, where);

    if (abelian_sylow)
      record(rep, "abelian_sylow_generation", same_group(s, join(cx, nt)), where);

    record(rep, "picky_in_p_prime_index_residual",
           is_picky(residual, p, x, bounds) == picky && residual.contains(x), where);

    if (!op.is_trivial())
      check_quotient(rep, "quotient_by_normal_p_subgroup", g, op, p, x, s, picky, bounds, where);
    if (!z.is_trivial())
      check_quotient(rep, "quotient_by_centre", g, z, p, x, s, picky, bounds, where);

    if (s.order() <= opt.conjugator_search_order) {
      const ClassData cs(s, bounds);
      bool found = true;
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (cd.class_of(cs[j].rep) == k && !conjugating_element(s, x, cs[j].rep))
          found = false;
      record(rep, "fused_conjugates_conjugate_inside_sub", found, where);
    }

    for (const Group& h : overs) {
      if (!is_subgroup(nt, h))
        continue;
      bool isolated = true;
      for (std::uint64_t i = 0; i < all->size() && isolated; ++i) {
        const Group hg = conjugate(h, all->element(i));
        if (hg.contains(x) && !same_group(hg, h))
          isolated = false;
      }
      if (isolated)
        record(rep, "sub_below_isolated_overgroups", is_subgroup(s, h), where);
    }

    if (g.order() <= opt.radical_order) {
      SubgroupBuilder b(g.degree());
      for (const Group& r : radicals)
        if (r.contains(x)) {
          const Group n = normalizer_backtrack(g, r);
          for (const Perm& y : n.generators())
            b.add(y);
        }
      record(rep, "radical_normalisers_generate_sub", same_group(b.build(), s), where);
    }

    for (unsigned i = 0; i < opt.conjugation_samples; ++i) {
      const Perm y = random_element(g, rng);
      record(rep, "conjugation_equivariant",
             same_group(subnormaliser(sys, x.conjugate(y)).subgroup, conjugate(s, y)), where);
    }
  }
  return rep;
}

PropertyReport check_product_property(const Group& h1, const Group& h2, std::uint64_t p,
                                      const Bounds& bounds) {
  PropertyReport rep;
  const Group g = zoo::direct_product(h1, h2);
  rep.group_order = g.order();
  rep.p = p;
  auto reps = [&](const Group& h) {
    std::vector<Perm> out;
    const ClassData cd(h, bounds);
    for (const ConjugacyClass& c : cd.classes())
      if (p_part(c.element_order, p) == c.element_order)
        out.push_back(c.rep);
    return out;
  };
  auto sub = [&](const Group& h, const Perm& x) {
    return x.is_identity() ? h : subnormaliser(h, p, x, bounds).subgroup;
  };
  const SylowSystem sys(g, p, bounds);
  for (const Perm& x1 : reps(h1))
    for (const Perm& x2 : reps(h2)) {
      if (x1.is_identity() && x2.is_identity())
        continue;
      const Perm x = zoo::embed_left(x1, h2.degree()) * zoo::embed_right(x2, h1.degree());
      const Group expected = zoo::direct_product(sub(h1, x1), sub(h2, x2));
      record(rep, "direct_product_factorises", same_group(subnormaliser(sys, x).subgroup, expected),
             x.to_string());
    }
  return rep;
}

} // namespace picky
