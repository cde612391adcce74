#include "picky/chain.hpp"

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky {

StabChain::StabChain(std::size_t degree, std::span<const Point> base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree)
      throw PreconditionError("base point out of range");
    push_level(b);
  }
}

void StabChain::push_level(Point base) {
  Level lv;
  lv.base = base;
  lv.pos.assign(degree_, -1);
  lv.pos[base] = 0;
  lv.orbit.push_back(base);
  lv.trans.push_back(Perm::identity(degree_));
  lv.inv_trans.push_back(Perm::identity(degree_));
  levels_.push_back(std::move(lv));
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& lv : levels_)
    b.push_back(lv.base);
  return b;
}

std::uint64_t StabChain::order() const { return stabilizer_order(0); }

std::uint64_t StabChain::stabilizer_order(std::size_t l) const {
  std::uint64_t o = 1;
  for (std::size_t i = l; i < levels_.size(); ++i)
    o = checked_mul(o, levels_[i].orbit.size());
  return o;
}

std::pair<Perm, std::size_t> StabChain::strip(Perm g, std::size_t from) const {
  Perm tmp;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Point gamma = g[lv.base];
    if (lv.pos[gamma] < 0)
      return {std::move(g), l};
    if (gamma != lv.base) {
      compose_into(g, lv.inv_trans[lv.pos[gamma]], tmp);
      std::swap(g, tmp);
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw PreconditionError("degree mismatch in membership test");
  auto [h, l] = strip(g);
  return h.is_identity();
}

bool StabChain::is_base_image_prefix(std::span<const Point> images) const {
  // Track only the images of the base points under the running residue.
  std::vector<Point> b(images.begin(), images.end());
  for (std::size_t l = 0; l < b.size(); ++l) {
    const Level& lv = levels_[l];
    if (lv.pos[b[l]] < 0)
      return false;
    const Perm& inv = lv.inv_trans[lv.pos[b[l]]];
    for (std::size_t t = l + 1; t < b.size(); ++t)
      b[t] = inv[b[t]];
  }
  return true;
}

void StabChain::extend_orbit(Level& lv) {
  for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
    const Point gamma = lv.orbit[idx];
    for (const Perm& s : lv.gens) {
      const Point delta = s[gamma];
      if (lv.pos[delta] >= 0)
        continue;
      lv.pos[delta] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(delta);
      Perm u = lv.trans[idx] * s;
      lv.inv_trans.push_back(u.inverse());
      lv.trans.push_back(std::move(u));
    }
  }
}

void StabChain::add_strong_generator(std::size_t l, const Perm& h) {
  levels_[l].gens.push_back(h);
  extend_orbit(levels_[l]);
}

bool StabChain::add_generator(const Perm& g) {
  if (g.degree() != degree_)
    throw PreconditionError("degree mismatch when adding a generator");
  auto [h, j] = strip(g);
  if (h.is_identity())
    return false;
  if (j == levels_.size())
    push_level(static_cast<Point>(h.smallest_moved_point()));
  for (std::size_t l = 0; l <= j; ++l)
    add_strong_generator(l, h);
  complete(j);
  return true;
}

void StabChain::complete(std::size_t from_level) {
  long i = static_cast<long>(from_level);
  Perm sch, tmp;
  while (i >= 0) {
    Level* lv = &levels_[i];
    bool restarted = false;
    for (std::size_t idx = 0; idx < lv->orbit.size() && !restarted; ++idx) {
      for (std::size_t s = 0; s < lv->gens.size(); ++s) {
        if (idx < lv->checked_orbit && s < lv->checked_gens)
          continue;
        const Point gamma = lv->orbit[idx];
        const Perm& gen = lv->gens[s];
        const Point delta = gen[gamma];
        compose_into(lv->trans[idx], gen, tmp);
        compose_into(tmp, lv->inv_trans[lv->pos[delta]], sch);
        if (sch.is_identity())
          continue;
        auto [h, m] = strip(sch, static_cast<std::size_t>(i) + 1);
        if (h.is_identity())
          continue;
        if (m == levels_.size())
          push_level(static_cast<Point>(h.smallest_moved_point()));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= m; ++l)
          add_strong_generator(l, h);
        i = static_cast<long>(m);
        restarted = true;
        break;
      }
    }
    if (!restarted) {
      lv = &levels_[i];
      lv->checked_orbit = lv->orbit.size();
      lv->checked_gens = lv->gens.size();
      --i;
    }
  }
}

} // namespace picky
