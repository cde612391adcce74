#include "picky/backtrack.hpp"

#include <algorithm>
#include <numeric>

#include "picky/elements.hpp"
#include "picky/errors.hpp"

namespace picky {

namespace {

class Searcher {
public:
  Searcher(const Group& g, const SearchProperty& prop)
      : g_(g), ch_(g.chain()), prop_(prop), base_(ch_.base()),
        images_(base_.size()) {}

  // Depth-first search below level j; `partial` = u_{j-1} ... u_0.
  std::optional<Perm> dfs(std::size_t j, const Perm& partial) {
    if (j == base_.size()) {
      if (prop_.accept(partial))
        return partial;
      return std::nullopt;
    }
    const auto& orb = ch_.orbit(j);
    std::vector<std::pair<Point, Point>> cand; // (image, orbit point)
    cand.reserve(orb.size());
    for (Point delta : orb)
      cand.emplace_back(partial[delta], delta);
    std::sort(cand.begin(), cand.end());
    for (auto [gamma, delta] : cand) {
      images_[j] = gamma;
      if (prop_.prune && !prop_.prune(std::span<const Point>(images_.data(), j + 1)))
        continue;
      Perm next = delta == base_[j] ? partial : ch_.transversal(j, delta) * partial;
      if (auto r = dfs(j + 1, next))
        return r;
    }
    return std::nullopt;
  }

  const std::vector<Point>& base() const { return base_; }
  std::vector<Point>& images() { return images_; }

private:
  const Group& g_;
  const StabChain& ch_;
  const SearchProperty& prop_;
  std::vector<Point> base_;
  std::vector<Point> images_;
};

// Label each point with the smallest point of its orbit under gens.
std::vector<Point> orbit_minima(std::size_t n, const std::vector<Perm>& gens) {
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (const Perm& s : gens)
    for (Point a = 0; a < n; ++a) {
      Point ra = find(a), rb = find(s[a]);
      if (ra != rb)
        parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  std::vector<Point> m(n);
  for (Point a = 0; a < n; ++a)
    m[a] = find(a);
  return m;
}

struct CycleData {
  std::vector<std::uint32_t> id, len, pos;
  explicit CycleData(const Perm& x) : id(x.degree()), len(x.degree()), pos(x.degree()) {
    std::vector<bool> done(x.degree(), false);
    std::uint32_t c = 0;
    for (Point s = 0; s < x.degree(); ++s) {
      if (done[s])
        continue;
      std::vector<Point> cyc;
      for (Point q = s; !done[q]; q = x[q]) {
        done[q] = true;
        cyc.push_back(q);
      }
      for (std::uint32_t i = 0; i < cyc.size(); ++i) {
        id[cyc[i]] = c;
        len[cyc[i]] = static_cast<std::uint32_t>(cyc.size());
        pos[cyc[i]] = i;
      }
      ++c;
    }
  }
};

// Pruning for t with x^t = y: t maps x-cycles onto y-cycles, preserving
// the cyclic position of every pair of points in a common cycle.
std::function<bool(std::span<const Point>)>
conjugation_pruner(std::vector<Point> base, const Perm& x, const Perm& y) {
  auto cx = std::make_shared<CycleData>(x);
  auto cy = std::make_shared<CycleData>(y);
  return [base = std::move(base), cx, cy](std::span<const Point> img) {
    const std::size_t j = img.size() - 1;
    const Point b = base[j], c = img[j];
    if (cx->len[b] != cy->len[c])
      return false;
    for (std::size_t i = 0; i < j; ++i) {
      const bool sx = cx->id[b] == cx->id[base[i]];
      const bool sy = cy->id[c] == cy->id[img[i]];
      if (sx != sy)
        return false;
      if (sx) {
        const std::uint32_t L = cx->len[b];
        const std::uint32_t dx = (cx->pos[b] + L - cx->pos[base[i]]) % L;
        const std::uint32_t dy = (cy->pos[c] + L - cy->pos[img[i]]) % L;
        if (dx != dy)
          return false;
      }
    }
    return true;
  };
}

} // namespace

Group subgroup_search(const Group& g, const SearchProperty& prop,
                      const Group& known) {
  const std::vector<Point> base = g.base();
  SubgroupBuilder kb(g.degree(), base);
  for (const Perm& s : known.generators())
    kb.add(s);
  Searcher search(g, prop);
  const StabChain& ch = g.chain();
  for (std::size_t l = base.size(); l-- > 0;) {
    for (std::size_t i = 0; i < l; ++i)
      search.images()[i] = base[i];
    std::vector<Point> sorted = ch.orbit(l);
    std::sort(sorted.begin(), sorted.end());
    Group kg = kb.build();
    std::vector<Point> mins = orbit_minima(g.degree(), kg.chain().strong_generators(l));
    for (Point gamma : sorted) {
      if (gamma == base[l] || mins[gamma] == mins[base[l]] || mins[gamma] != gamma)
        continue;
      search.images()[l] = gamma;
      if (prop.prune &&
          !prop.prune(std::span<const Point>(search.images().data(), l + 1)))
        continue;
      const Perm& u = ch.transversal(l, gamma);
      if (auto found = search.dfs(l + 1, u)) {
        kb.add(*found);
        kg = kb.build();
        mins = orbit_minima(g.degree(), kg.chain().strong_generators(l));
      }
    }
  }
  return kb.build();
}

std::optional<Perm> element_search(const Group& g, const SearchProperty& prop) {
  Searcher search(g, prop);
  return search.dfs(0, Perm::identity(g.degree()));
}

Group centralizer_backtrack(const Group& g, const Perm& x) {
  SearchProperty prop;
  prop.prune = conjugation_pruner(g.base(), x, x);
  prop.accept = [&x](const Perm& t) { return x.conjugate(t) == x; };
  Group known = g.contains(x) ? cyclic_subgroup(x) : Group::trivial(g.degree());
  return subgroup_search(g, prop, known);
}

std::optional<Perm> conjugating_element(const Group& g, const Perm& x,
                                        const Perm& y) {
  if (x.order() != y.order())
    return std::nullopt;
  SearchProperty prop;
  prop.prune = conjugation_pruner(g.base(), x, y);
  prop.accept = [&](const Perm& t) { return x.conjugate(t) == y; };
  return element_search(g, prop);
}

Group normalizer_backtrack(const Group& g, const Group& h) {
  const std::size_t n = g.degree();
  std::vector<Point> oid = orbit_minima(n, h.generators());
  std::vector<std::uint32_t> osize(n, 0);
  for (Point a = 0; a < n; ++a)
    ++osize[oid[a]];
  SearchProperty prop;
  prop.prune = [base = g.base(), oid, osize](std::span<const Point> img) {
    const std::size_t j = img.size() - 1;
    const Point b = base[j], c = img[j];
    if (osize[oid[b]] != osize[oid[c]])
      return false;
    for (std::size_t i = 0; i < j; ++i)
      if ((oid[b] == oid[base[i]]) != (oid[c] == oid[img[i]]))
        return false;
    return true;
  };
  prop.accept = [&h](const Perm& t) {
    for (const Perm& s : h.generators())
      if (!h.contains(s.conjugate(t)))
        return false;
    return true;
  };
  Group known = is_subgroup(h, g) ? h : Group::trivial(n);
  return subgroup_search(g, prop, known);
}

Group intersection(const Group& a, const Group& b) {
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& other = a.order() <= b.order() ? b : a;
  if (is_subgroup(small, other))
    return small;
  Group rebased = other.with_base(small.base());
  SearchProperty prop;
  prop.prune = [&rebased](std::span<const Point> img) {
    return rebased.chain().is_base_image_prefix(img);
  };
  prop.accept = [&rebased](const Perm& t) { return rebased.contains(t); };
  return subgroup_search(small, prop, Group::trivial(a.degree()));
}

Group exhaustive_subgroup(const Group& g, std::uint64_t bound,
                          const std::function<bool(const Perm&)>& accept) {
  SubgroupBuilder sb(g.degree());
  for_each_element(g, bound, [&](const Perm& t) {
    if (!sb.contains(t) && accept(t))
      sb.add(t);
    return true;
  });
  return sb.build();
}

Group centralizer_exhaustive(const Group& g, const Perm& x, std::uint64_t bound) {
  return exhaustive_subgroup(g, bound,
                             [&](const Perm& t) { return x.conjugate(t) == x; });
}

Group normalizer_exhaustive(const Group& g, const Group& h, std::uint64_t bound) {
  return exhaustive_subgroup(g, bound, [&](const Perm& t) {
    for (const Perm& s : h.generators())
      if (!h.contains(s.conjugate(t)))
        return false;
    return true;
  });
}

Group centralizer(const Group& g, const Perm& x, const Bounds& bounds) {
  if (!g.contains(x))
    throw PreconditionError("centralizer: element is not in the group");
  Group c = centralizer_backtrack(g, x);
  if (g.order() <= bounds.exhaustive_oracle &&
      !same_group(c, centralizer_exhaustive(g, x, bounds.exhaustive_oracle)))
    throw InternalInconsistency("centralizer: backtrack and exhaustive scan disagree");
  return c;
}

Group normalizer(const Group& g, const Group& h, const Bounds& bounds) {
  if (!is_subgroup(h, g))
    throw PreconditionError("normalizer: H is not a subgroup of G");
  Group nm = normalizer_backtrack(g, h);
  if (g.order() <= bounds.exhaustive_oracle &&
      !same_group(nm, normalizer_exhaustive(g, h, bounds.exhaustive_oracle)))
    throw InternalInconsistency("normalizer: backtrack and exhaustive scan disagree");
  return nm;
}

Group center(const Group& g) {
  Group c = g;
  for (const Perm& s : g.generators()) {
    if (c.is_trivial())
      break;
    c = centralizer_backtrack(c, s);
  }
  return c;
}

} // namespace picky
