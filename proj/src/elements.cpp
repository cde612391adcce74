#include "picky/elements.hpp"

#include <algorithm>
#include <string>

#include "picky/errors.hpp"

namespace picky {

ElementIndexer::ElementIndexer(const Group& g) : group_(g) {
  const StabChain& ch = g.chain();
  base_ = ch.base();
  const std::size_t k = base_.size();
  sorted_.resize(k);
  rank_.resize(k);
  stride_.assign(k, 1);
  for (std::size_t l = 0; l < k; ++l) {
    sorted_[l] = ch.orbit(l);
    std::sort(sorted_[l].begin(), sorted_[l].end());
    rank_[l].assign(g.degree(), -1);
    for (std::size_t r = 0; r < sorted_[l].size(); ++r)
      rank_[l][sorted_[l][r]] = static_cast<std::int32_t>(r);
  }
  for (std::size_t l = k; l-- > 1;)
    stride_[l - 1] = stride_[l] * sorted_[l].size();
  size_ = g.order();
}

std::uint64_t ElementIndexer::index_of(const Perm& g) const {
  std::vector<Point> b(base_.size());
  for (std::size_t l = 0; l < base_.size(); ++l)
    b[l] = g[base_[l]];
  const std::uint64_t idx = index_of_base_images(b);
  if (idx == npos)
    return npos;
  // Base images determine at most one member; confirm g is that member.
  Perm check = element(idx);
  return check == g ? idx : npos;
}

std::uint64_t ElementIndexer::index_of_base_images(std::span<Point> b) const {
  const StabChain& ch = group_.chain();
  std::uint64_t idx = 0;
  const std::size_t k = base_.size();
  for (std::size_t l = 0; l < k; ++l) {
    const Point gamma = b[l];
    const std::int32_t r = rank_[l][gamma];
    if (r < 0)
      return npos;
    idx += static_cast<std::uint64_t>(r) * stride_[l];
    if (gamma == base_[l])
      continue;
    const Perm& inv = ch.inverse_transversal(l, gamma);
    for (std::size_t t = l + 1; t < k; ++t)
      b[t] = inv[b[t]];
  }
  return idx;
}

void ElementIndexer::element_into(std::uint64_t idx, Perm& out, Perm& scratch) const {
  const StabChain& ch = group_.chain();
  const std::size_t k = base_.size();
  out = Perm::identity(group_.degree());
  for (std::size_t l = k; l-- > 0;) {
    const std::uint64_t r = (idx / stride_[l]) % sorted_[l].size();
    const Point gamma = sorted_[l][r];
    if (gamma == base_[l])
      continue;
    compose_into(out, ch.transversal(l, gamma), scratch);
    std::swap(out, scratch);
  }
}

Perm ElementIndexer::element(std::uint64_t idx) const {
  Perm out, scratch;
  element_into(idx, out, scratch);
  return out;
}

void for_each_element(const Group& g, std::uint64_t bound,
                      const std::function<bool(const Perm&)>& visit) {
  if (g.order() > bound)
    throw BoundExceeded("element enumeration refused: |G| = " +
                        std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(bound));
  ElementIndexer ix(g);
  Perm e, scratch;
  for (std::uint64_t i = 0; i < ix.size(); ++i) {
    ix.element_into(i, e, scratch);
    if (!visit(e))
      return;
  }
}

Perm random_element(const Group& g, std::mt19937_64& rng) {
  const StabChain& ch = g.chain();
  Perm out = Perm::identity(g.degree());
  for (std::size_t l = ch.depth(); l-- > 0;) {
    const auto& orb = ch.orbit(l);
    std::uniform_int_distribution<std::size_t> d(0, orb.size() - 1);
    out = out * ch.transversal(l, orb[d(rng)]);
  }
  return out;
}

} // namespace picky
