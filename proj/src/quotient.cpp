#include "picky/quotient.hpp"

#include <algorithm>
#include <numeric>

#include "picky/errors.hpp"
#include "picky/structure.hpp"

namespace picky {

QuotientAction::QuotientAction(const Group& source, const Group& kernel)
    : source_(source), kernel_(kernel) {
  if (!is_subgroup(kernel, source) || !is_normal(source, kernel))
    throw PreconditionError("quotient: N is not a normal subgroup of G");
  const std::size_t n = source.degree();
  const std::uint64_t target = source.order() / kernel.order();

  // Try the action on N-orbits (a block system because N is normal).
  block_of_.assign(n, 0);
  {
    std::vector<std::int64_t> id(n, -1);
    std::uint32_t nb = 0;
    for (Point a = 0; a < n; ++a) {
      if (id[a] >= 0)
        continue;
      std::vector<Point> orb{a};
      id[a] = nb;
      for (std::size_t i = 0; i < orb.size(); ++i)
        for (const Perm& s : kernel.generators())
          if (id[s[orb[i]]] < 0) {
            id[s[orb[i]]] = nb;
            orb.push_back(s[orb[i]]);
          }
      block_rep_.push_back(a);
      ++nb;
    }
    for (Point a = 0; a < n; ++a)
      block_of_[a] = static_cast<std::uint32_t>(id[a]);
    blocks_ = true;
    raw_degree_ = nb;
    std::vector<Perm> imgs;
    for (const Perm& s : source.generators())
      imgs.emplace_back(raw_action(s));
    Group raw = Group::generated(raw_degree_, imgs);
    if (raw.order() != target) {
      blocks_ = false;
      block_of_.clear();
      block_rep_.clear();
    }
  }

  if (!blocks_) {
    cosets_ = std::make_shared<RightCosets>(source, kernel, ~std::uint64_t{0});
    raw_degree_ = cosets_->size();
  }

  // Compress to moved points of the image.
  std::vector<std::vector<Point>> raw_gens;
  for (const Perm& s : source.generators())
    raw_gens.push_back(raw_action(s));
  std::vector<bool> moved(raw_degree_, false);
  for (const auto& r : raw_gens)
    for (Point a = 0; a < raw_degree_; ++a)
      if (r[a] != a)
        moved[a] = true;
  compress_.assign(raw_degree_, -1);
  std::size_t m = 0;
  for (Point a = 0; a < raw_degree_; ++a)
    if (moved[a])
      compress_[a] = static_cast<std::int64_t>(m++);
  std::vector<Perm> img_gens;
  for (const Perm& s : source.generators())
    img_gens.push_back(project(s));
  image_ = Group::generated(m, img_gens);
  if (image_.order() != target)
    throw InternalInconsistency("quotient: image order differs from [G:N]");

  // Diagonal group for lifting.
  std::vector<Point> prefix;
  for (Point b : image_.base())
    prefix.push_back(static_cast<Point>(n + b));
  std::vector<Perm> dgens;
  for (std::size_t i = 0; i < source.generators().size(); ++i) {
    std::vector<Point> im(n + m);
    const Perm& s = source.generators()[i];
    for (Point a = 0; a < n; ++a)
      im[a] = s[a];
    for (Point a = 0; a < m; ++a)
      im[n + a] = static_cast<Point>(n + img_gens[i][a]);
    dgens.emplace_back(std::move(im));
  }
  diagonal_ = Group::generated(n + m, dgens, prefix);
  image_levels_ = prefix.size();
}

std::vector<Point> QuotientAction::raw_action(const Perm& g) const {
  std::vector<Point> r(raw_degree_);
  if (blocks_) {
    for (std::size_t b = 0; b < raw_degree_; ++b)
      r[b] = block_of_[g[block_rep_[b]]];
  } else {
    for (std::size_t i = 0; i < raw_degree_; ++i)
      r[i] = static_cast<Point>(cosets_->index_of(cosets_->rep(i) * g));
  }
  return r;
}

Perm QuotientAction::project(const Perm& g) const {
  if (g.degree() != source_.degree())
    throw PreconditionError("project: degree mismatch");
  std::vector<Point> r = raw_action(g);
  std::size_t m = 0;
  for (auto c : compress_)
    if (c >= 0)
      ++m;
  std::vector<Point> out(m);
  for (Point a = 0; a < raw_degree_; ++a) {
    if (compress_[a] < 0) {
      if (r[a] != a)
        throw PreconditionError("project: element is not in the source group");
      continue;
    }
    if (compress_[r[a]] < 0)
      throw PreconditionError("project: element is not in the source group");
    out[compress_[a]] = static_cast<Point>(compress_[r[a]]);
  }
  return Perm(std::move(out));
}

Group QuotientAction::project(const Group& h) const {
  std::vector<Perm> gens;
  for (const Perm& s : h.generators())
    gens.push_back(project(s));
  return Group::generated(image_.degree(), gens);
}

Perm QuotientAction::lift(const Perm& gbar) const {
  if (!image_.contains(gbar))
    throw PreconditionError("lift: element is not in the image");
  const std::size_t n = source_.degree();
  const StabChain& ch = diagonal_.chain();
  // r tracks the remaining image-side permutation; acc = u_{l}...u_0.
  std::vector<Point> r = gbar.images();
  Perm acc = Perm::identity(diagonal_.degree());
  for (std::size_t l = 0; l < image_levels_; ++l) {
    const Point beta = ch.base_point(l);
    const Point gamma = static_cast<Point>(n + r[beta - n]);
    if (!ch.in_orbit(l, gamma))
      throw InternalInconsistency("lift: image point outside diagonal orbit");
    const Perm& u = ch.transversal(l, gamma);
    const Perm& ui = ch.inverse_transversal(l, gamma);
    for (auto& x : r)
      x = static_cast<Point>(ui[n + x] - n);
    acc = u * acc;
  }
  std::vector<Point> out(acc.images().begin(), acc.images().begin() + n);
  Perm g(std::move(out));
  if (project(g) != gbar)
    throw InternalInconsistency("lift: projection of the lift differs");
  return g;
}

Group QuotientAction::lift(const Group& hbar) const {
  SubgroupBuilder b(kernel_);
  for (const Perm& s : hbar.generators())
    b.add(lift(s));
  return b.build();
}

} // namespace picky
