#include "picky/subnorm.hpp"

#include <unordered_set>

#include "picky/backtrack.hpp"
#include "picky/elements.hpp"
#include "picky/errors.hpp"
#include "picky/structure.hpp"
#include "picky/util.hpp"

namespace picky {

std::string method_name(SubMethod m) {
  switch (m) {
  case SubMethod::generation:
    return "generation";
  case SubMethod::fusion:
    return "fusion";
  case SubMethod::bruteforce:
    return "bruteforce";
  }
  return "?";
}

SubMethod parse_method(const std::string& s) {
  if (s == "gen" || s == "generation")
    return SubMethod::generation;
  if (s == "fusion")
    return SubMethod::fusion;
  if (s == "brute" || s == "bruteforce")
    return SubMethod::bruteforce;
  throw InputError("unknown subnormaliser method '" + s + "'");
}

namespace {

void add_conjugates(SubgroupBuilder& b, const Group& h, const Perm& t) {
  for (const Perm& s : h.generators())
    b.add(s.conjugate(t));
}

} // namespace

SubnormaliserResult subnormaliser(const SylowSystem& sys, const Perm& x) {
  require_p_element(sys.group(), sys.prime(), x);
  const Group& g = sys.group();
  std::vector<Perm> ts = sys.conjugators_containing(x);
  SubgroupBuilder b(g.degree(), g.base());
  for (const Perm& t : ts) {
    if (b.order() == g.order())
      break;
    add_conjugates(b, sys.normalizer(), t);
  }
  Group sub = b.build();
  return {x, sys.prime(), sub, SubMethod::generation, ts.size() == 1, ts.size()};
}

SubnormaliserResult subnormaliser(const Group& g, std::uint64_t p, const Perm& x,
                                  const Bounds& bounds) {
  return subnormaliser(SylowSystem(g, p, bounds), x);
}

SubnormaliserResult subnormaliser_fusion(const SylowSystem& sys, const Perm& x,
                                         const Bounds& bounds) {
  require_p_element(sys.group(), sys.prime(), x);
  const Group& g = sys.group();
  const Perm t = sys.conjugator_into(x);
  const Group q = conjugate(sys.sylow(), t);
  const Group nq = conjugate(sys.normalizer(), t);
  SubgroupBuilder b(g.degree(), g.base());
  std::uint64_t count = 0;
  if (g.order() <= bounds.fusion_scan) {
    for_each_element(g, bounds.fusion_scan, [&](const Perm& e) {
      if (q.contains(x.conjugate(e))) {
        ++count;
        b.add(e);
      }
      return true;
    });
  } else {
    for (const Perm& s : nq.generators())
      b.add(s);
    const Group cx = centralizer_backtrack(g, x);
    for (const Perm& s : cx.generators())
      b.add(s);
    // Orbits of N_G(Q) on elements of Q with the order of x.
    const std::uint64_t o = x.order();
    std::unordered_set<Perm, PermHash> seen;
    for_each_element(q, ~std::uint64_t{0}, [&](const Perm& y) {
      if (y.order() != o || seen.count(y))
        return true;
      std::vector<Perm> orbit{y};
      seen.insert(y);
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const Perm& s : nq.generators()) {
          Perm z = orbit[i].conjugate(s);
          if (seen.insert(z).second)
            orbit.push_back(std::move(z));
        }
      if (b.order() == g.order())
        return true;
      ++count;
      if (auto c = conjugating_element(g, x, y))
        b.add(*c);
      return true;
    });
  }
  Group sub = b.build();
  return {x, sys.prime(), sub, SubMethod::fusion,
          sub.order() == sys.normalizer().order(), count};
}

SubnormaliserResult subnormaliser_fusion(const Group& g, std::uint64_t p, const Perm& x,
                                         const Bounds& bounds) {
  return subnormaliser_fusion(SylowSystem(g, p, bounds), x, bounds);
}

SubnormaliserResult subnormaliser_bruteforce(const Group& g, std::uint64_t p,
                                             const Perm& x, const Bounds& bounds) {
  require_p_element(g, p, x);
  if (g.order() > bounds.brute_force)
    throw BoundExceeded("brute-force subnormaliser refused: |G| = " +
                        std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(bounds.brute_force));
  const Group cx = cyclic_subgroup(x);
  const std::uint64_t o = x.order();
  std::vector<Perm> xpow;
  for (std::uint64_t i = 0; i < o; ++i)
    xpow.push_back(x.pow(static_cast<long long>(i)));
  ElementIndexer ix(g);
  std::vector<bool> done(ix.size(), false);
  SubgroupBuilder b(g.degree(), g.base());
  b.add(x); // with x, one representative per coset <x> e generates the rest
  std::uint64_t count = 0;
  Perm e, scratch;
  for (std::uint64_t i = 0; i < ix.size(); ++i) {
    if (done[i])
      continue;
    ix.element_into(i, e, scratch);
    // <x^k e, x> = <e, x>: decide once per left coset of <x>.
    bool in;
    if (cx.contains(x.conjugate(e)))
      in = true;
    else
      in = is_subnormal(Group::generated(g.degree(), {e, x}), cx);
    for (const Perm& xp : xpow) {
      const std::uint64_t j = ix.index_of(xp * e);
      if (!done[j]) {
        done[j] = true;
        if (in)
          ++count;
      }
    }
    if (in)
      b.add(e);
  }
  Group sub = b.build();
  return {x, p, sub, SubMethod::bruteforce, false, count};
}

bool is_picky(const SylowSystem& sys, const Perm& x) {
  SubnormaliserResult r = subnormaliser(sys, x);
  const bool unique = r.witness_count == 1;
  const bool sub_is_normalizer = r.subgroup.order() == sys.normalizer().order();
  if (unique != sub_is_normalizer)
    throw InternalInconsistency("picky criteria disagree: Sylow count " +
                                std::to_string(r.witness_count) + ", |Sub| = " +
                                std::to_string(r.subgroup.order()) + ", |N_G(P)| = " +
                                std::to_string(sys.normalizer().order()));
  return unique;
}

bool is_picky(const Group& g, std::uint64_t p, const Perm& x, const Bounds& bounds) {
  return is_picky(SylowSystem(g, p, bounds), x);
}

PickyReport picky_classes(const ClassData& cd, const SylowSystem& sys,
                          const Bounds& bounds, bool with_bruteforce) {
  const Group& g = sys.group();
  const std::uint64_t p = sys.prime();
  PickyReport rep{g.order(), p, sys.sylow().order(), sys.normalizer().order(),
                  sys.count(), {}};
  for (std::size_t k = 0; k < cd.size(); ++k) {
    const ConjugacyClass& c = cd[k];
    if (c.element_order == 1 || p_part(c.element_order, p) != c.element_order)
      continue;
    const Perm& x = c.rep;
    SubnormaliserResult gen = subnormaliser(sys, x);
    const bool picky = is_picky(sys, x);
    PickyRow row{k,    x,           c.element_order, c.size, c.centralizer_order,
                 gen.witness_count, picky, gen.subgroup.order(),
                 {SubMethod::generation}, true};
    SubnormaliserResult fus = subnormaliser_fusion(sys, x, bounds);
    row.methods.push_back(SubMethod::fusion);
    row.methods_agree = same_group(gen.subgroup, fus.subgroup);
    if (with_bruteforce && g.order() <= bounds.brute_force) {
      SubnormaliserResult bf = subnormaliser_bruteforce(g, p, x, bounds);
      row.methods.push_back(SubMethod::bruteforce);
      row.methods_agree = row.methods_agree && same_group(gen.subgroup, bf.subgroup);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

PickyReport picky_classes(const Group& g, std::uint64_t p, const Bounds& bounds,
                          bool with_bruteforce) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not a prime");
  ClassData cd(g, bounds);
  SylowSystem sys(g, p, bounds);
  return picky_classes(cd, sys, bounds, with_bruteforce);
}

bool almost_normal(const Group& g, std::uint64_t p, const Bounds& bounds) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not a prime");
  ClassData cd(g, bounds);
  SylowSystem sys(g, p, bounds);
  for (const auto& c : cd.classes()) {
    if (c.element_order == 1 || p_part(c.element_order, p) != c.element_order)
      continue;
    if (subnormaliser(sys, c.rep).subgroup.order() != g.order())
      return false;
  }
  return true;
}

} // namespace picky
