#include "picky/classes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky {

ClassData::ClassData(const Group& g, const Bounds& bounds) : indexer_(g) {
  const std::uint64_t n = g.order();
  if (n > bounds.enumeration)
    throw BoundExceeded("conjugacy classes refused: |G| = " + std::to_string(n) +
                        " exceeds enumeration bound " +
                        std::to_string(bounds.enumeration));
  label_.assign(n, -1);
  const std::size_t k = indexer_.base().size();
  const std::vector<Point>& base = indexer_.base();
  std::vector<Perm> gens = g.generators();
  std::vector<Perm> gens_inv;
  for (const Perm& s : gens)
    gens_inv.push_back(s.inverse());

  struct Raw {
    std::uint64_t first;
    std::uint64_t size;
  };
  std::vector<Raw> raw;
  std::vector<std::uint32_t> queue;
  std::vector<Point> images(k);
  Perm y, scratch;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (label_[start] >= 0)
      continue;
    const auto c = static_cast<std::int32_t>(raw.size());
    label_[start] = c;
    queue.assign(1, static_cast<std::uint32_t>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      indexer_.element_into(queue[head], y, scratch);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        // base images of y^s = s^-1 y s
        for (std::size_t l = 0; l < k; ++l)
          images[l] = gens[s][y[gens_inv[s][base[l]]]];
        const std::uint64_t idx = indexer_.index_of_base_images(images);
        if (label_[idx] < 0) {
          label_[idx] = c;
          queue.push_back(static_cast<std::uint32_t>(idx));
        }
      }
    }
    raw.push_back({start, queue.size()});
  }

  std::vector<ConjugacyClass> cls;
  cls.reserve(raw.size());
  for (const Raw& r : raw) {
    Perm rep = indexer_.element(r.first);
    cls.push_back({rep, r.size, n / r.size, rep.order()});
  }
  std::vector<std::size_t> perm(cls.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (cls[a].element_order != cls[b].element_order)
      return cls[a].element_order < cls[b].element_order;
    if (cls[a].size != cls[b].size)
      return cls[a].size < cls[b].size;
    return cls[a].rep.images() < cls[b].rep.images();
  });
  std::vector<std::int32_t> relabel(cls.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    classes_.push_back(cls[perm[i]]);
    relabel[perm[i]] = static_cast<std::int32_t>(i);
  }
  for (auto& l : label_)
    l = relabel[l];

  for (const auto& c : classes_)
    exponent_ = std::lcm(exponent_, c.element_order);
  primes_ = prime_divisors(exponent_);
  for (std::uint64_t p : primes_) {
    std::vector<std::size_t> pm(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i)
      pm[i] = class_of(classes_[i].rep.pow(static_cast<long long>(p)));
    power_maps_.emplace(p, std::move(pm));
  }
}

const std::vector<std::size_t>& ClassData::power_map(std::uint64_t p) const {
  auto it = power_maps_.find(p);
  if (it == power_maps_.end())
    throw PreconditionError("no power map stored for " + std::to_string(p));
  return it->second;
}

std::size_t ClassData::power_class(std::size_t k, std::uint64_t e) const {
  const std::uint64_t o = classes_[k].element_order;
  return class_of(classes_[k].rep.pow(static_cast<long long>(e % o)));
}

std::size_t ClassData::class_of(const Perm& g) const {
  const std::uint64_t idx = indexer_.index_of(g);
  if (idx == ElementIndexer::npos)
    throw PreconditionError("element is not in the group");
  return class_of_index(idx);
}

std::uint64_t group_exponent(const ClassData& cd) { return cd.exponent(); }

} // namespace picky
