#include "picky/cosets.hpp"

#include <string>

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky {

Perm canonical_right_coset_rep(const Group& h, const Perm& g) {
  const StabChain& ch = h.chain();
  Perm r = g;
  for (std::size_t l = 0; l < ch.depth(); ++l) {
    const Point b = ch.base_point(l);
    Point best = r[b], arg = b;
    for (Point d : ch.orbit(l))
      if (r[d] < best) {
        best = r[d];
        arg = d;
      }
    if (arg != b)
      r = ch.transversal(l, arg) * r;
  }
  return r;
}

std::size_t RightCosets::VecHash::operator()(const std::vector<Point>& v) const {
  return fnv1a(v.data(), v.size() * sizeof(Point));
}

RightCosets::RightCosets(const Group& g, const Group& h, std::uint64_t bound) : h_(h) {
  const std::uint64_t idx = g.order() / h.order();
  if (idx > bound)
    throw BoundExceeded("coset enumeration refused: index " + std::to_string(idx) +
                        " exceeds bound " + std::to_string(bound));
  reps_.push_back(canonical_right_coset_rep(h, Perm::identity(g.degree())));
  index_.emplace(reps_[0].images(), 0);
  for (std::size_t i = 0; i < reps_.size(); ++i)
    for (const Perm& s : g.generators()) {
      Perm c = canonical_right_coset_rep(h, reps_[i] * s);
      if (index_.emplace(c.images(), static_cast<std::uint32_t>(reps_.size())).second)
        reps_.push_back(std::move(c));
    }
  if (reps_.size() != idx)
    throw InternalInconsistency("coset enumeration found " + std::to_string(reps_.size()) +
                                " cosets, expected " + std::to_string(idx));
}

std::size_t RightCosets::index_of(const Perm& g) const {
  auto it = index_.find(canonical_right_coset_rep(h_, g).images());
  if (it == index_.end())
    throw PreconditionError("coset lookup: element is not in the group");
  return it->second;
}

} // namespace picky
