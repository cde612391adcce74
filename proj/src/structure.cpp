#include "picky/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "picky/elements.hpp"
#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky {

Group normal_closure(const Group& g, const Group& h) {
  SubgroupBuilder b(g.degree());
  std::vector<Perm> todo(h.generators().begin(), h.generators().end());
  std::vector<Perm> gens;
  for (const Perm& s : todo)
    if (b.add(s))
      gens.push_back(s);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const Perm& s : g.generators()) {
      Perm c = gens[i].conjugate(s);
      if (b.add(c))
        gens.push_back(c);
    }
  return b.build();
}

bool is_normal(const Group& g, const Group& h) {
  for (const Perm& n : h.generators())
    for (const Perm& s : g.generators())
      if (!h.contains(n.conjugate(s)))
        return false;
  return true;
}

Group core(const Group& g, const Group& h) {
  Group k = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& s : g.generators()) {
      if (is_normal(Group::generated(g.degree(), {s}), k))
        continue;
      Group next = intersection(k, conjugate(k, s));
      if (next.order() < k.order()) {
        k = next;
        changed = true;
      }
    }
  }
  return k;
}

bool is_subnormal(const Group& g, const Group& h) {
  if (!is_subgroup(h, g))
    throw PreconditionError("is_subnormal: H is not a subgroup of G");
  Group k = g;
  while (k.order() != h.order()) {
    Group n = normal_closure(k, h);
    if (n.order() == k.order())
      return false;
    k = n;
  }
  return true;
}

std::uint64_t subgroup_key(const Group& h) {
  std::vector<std::uint64_t> hs;
  hs.reserve(h.order());
  for_each_element(h, ~std::uint64_t{0}, [&](const Perm& e) {
    hs.push_back(e.hash());
    return true;
  });
  std::sort(hs.begin(), hs.end());
  return fnv1a(hs.data(), hs.size() * sizeof(std::uint64_t));
}

namespace {

// Deduplicating collection of subgroups.
class SubgroupSet {
public:
  bool insert(const Group& h) {
    auto& bucket = by_key_[subgroup_key(h)];
    for (std::size_t i : bucket)
      if (same_group(items_[i], h))
        return false;
    bucket.push_back(items_.size());
    items_.push_back(h);
    return true;
  }
  std::vector<Group>& items() { return items_; }

private:
  std::map<std::uint64_t, std::vector<std::size_t>> by_key_;
  std::vector<Group> items_;
};

void check_bound(const Group& g, std::uint64_t bound, const char* what) {
  if (g.order() > bound)
    throw BoundExceeded(std::string(what) + " refused: |G| = " +
                        std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(bound));
}

std::vector<Group> cyclic_subgroups(const Group& g, std::uint64_t bound) {
  SubgroupSet set;
  for_each_element(g, bound, [&](const Perm& e) {
    if (!e.is_identity())
      set.insert(cyclic_subgroup(e));
    return true;
  });
  return set.items();
}

void stable_by_order(std::vector<Group>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Group& a, const Group& b) {
    return a.order() < b.order();
  });
}

} // namespace

std::vector<Group> overgroups(const Group& g, const Group& h, std::uint64_t bound) {
  check_bound(g, bound, "overgroup enumeration");
  std::vector<Group> cyc = cyclic_subgroups(g, bound);
  SubgroupSet set;
  set.insert(h);
  for (std::size_t i = 0; i < set.items().size(); ++i) {
    const Group k = set.items()[i];
    for (const Group& c : cyc)
      if (!is_subgroup(c, k))
        set.insert(join(k, c));
  }
  stable_by_order(set.items());
  return set.items();
}

std::vector<Group> all_subgroups(const Group& g, std::uint64_t bound) {
  return overgroups(g, Group::trivial(g.degree()), bound);
}

bool is_p_group(const Group& g, std::uint64_t p) {
  return p_part(g.order(), p) == g.order();
}

std::vector<Group> p_subgroups(const Group& g, std::uint64_t p, std::uint64_t bound) {
  check_bound(g, bound, "p-subgroup enumeration");
  std::vector<Group> cyc;
  for (const Group& c : cyclic_subgroups(g, bound))
    if (is_p_group(c, p))
      cyc.push_back(c);
  // Every nontrivial p-group Q has a normal maximal subgroup M with
  // Q = <M, c>, so joining with normalising cyclic p-subgroups suffices.
  SubgroupSet set;
  set.insert(Group::trivial(g.degree()));
  for (std::size_t i = 0; i < set.items().size(); ++i) {
    const Group k = set.items()[i];
    for (const Group& c : cyc) {
      if (is_subgroup(c, k))
        continue;
      if (!is_normal(c, k))
        continue;
      set.insert(join(k, c));
    }
  }
  stable_by_order(set.items());
  return set.items();
}

std::vector<Group> normal_subgroups_containing(const Group& g, const Group& h,
                                               std::uint64_t bound) {
  check_bound(g, bound, "normal subgroup enumeration");
  SubgroupSet set;
  std::vector<Group> closures;
  for_each_element(g, bound, [&](const Perm& e) {
    closures.push_back(normal_closure(g, Group::generated(g.degree(), {e})));
    return true;
  });
  set.insert(normal_closure(g, h));
  for (std::size_t i = 0; i < set.items().size(); ++i) {
    const Group k = set.items()[i];
    for (const Group& c : closures)
      if (!is_subgroup(c, k))
        set.insert(join(k, c));
  }
  stable_by_order(set.items());
  return set.items();
}

bool is_subnormal_search(const Group& g, const Group& h, std::uint64_t bound) {
  if (!is_subgroup(h, g))
    throw PreconditionError("is_subnormal_search: H is not a subgroup of G");
  if (g.order() == h.order())
    return true;
  for (const Group& n : normal_subgroups_containing(g, h, bound))
    if (n.order() < g.order() && is_subnormal_search(n, h, bound))
      return true;
  return false;
}

} // namespace picky
