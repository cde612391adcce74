#include "picky/group.hpp"

#include <string>

#include "picky/errors.hpp"

namespace picky {

struct Group::Data {
  std::size_t degree;
  std::vector<Perm> gens;
  StabChain chain;
};

Group::Group() : Group(trivial(0)) {}

Group::Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

Group Group::trivial(std::size_t degree) {
  return Group(std::make_shared<const Data>(Data{degree, {}, StabChain(degree)}));
}

Group Group::generated(std::size_t degree, std::vector<Perm> gens,
                       std::span<const Point> base_prefix) {
  SubgroupBuilder b(degree, base_prefix);
  for (const Perm& g : gens)
    b.add(g);
  return b.build();
}

std::size_t Group::degree() const { return d_->degree; }
const std::vector<Perm>& Group::generators() const { return d_->gens; }
std::uint64_t Group::order() const { return d_->chain.order(); }
const StabChain& Group::chain() const { return d_->chain; }

bool Group::contains(const Perm& g) const {
  if (g.degree() != d_->degree)
    throw PreconditionError("degree mismatch: element of degree " +
                            std::to_string(g.degree()) + ", group of degree " +
                            std::to_string(d_->degree));
  return d_->chain.contains(g);
}

Group Group::with_base(std::span<const Point> base_prefix) const {
  return generated(d_->degree, d_->gens, base_prefix);
}

Group group_from_generators(const std::vector<std::vector<Point>>& gens,
                            std::size_t degree) {
  std::vector<Perm> perms;
  perms.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != degree)
      throw InputError("generator " + std::to_string(i) + " has length " +
                       std::to_string(gens[i].size()) + ", expected degree " +
                       std::to_string(degree));
    if (!is_bijection(gens[i]))
      throw InputError("generator " + std::to_string(i) +
                       " is not a bijection on 0.." + std::to_string(degree) +
                       "-1");
    perms.emplace_back(gens[i]);
  }
  return Group::generated(degree, std::move(perms));
}

SubgroupBuilder::SubgroupBuilder(std::size_t degree, std::span<const Point> base_prefix)
    : degree_(degree), chain_(degree, base_prefix) {}

SubgroupBuilder::SubgroupBuilder(const Group& start)
    : degree_(start.degree()), gens_(start.generators()), chain_(start.chain()) {}

bool SubgroupBuilder::add(const Perm& g) {
  if (!chain_.add_generator(g))
    return false;
  gens_.push_back(g);
  return true;
}

Group SubgroupBuilder::build() const {
  return Group(std::make_shared<const Group::Data>(Group::Data{degree_, gens_, chain_}));
}

bool is_subgroup(const Group& h, const Group& g) {
  if (h.degree() != g.degree())
    return false;
  for (const Perm& x : h.generators())
    if (!g.contains(x))
      return false;
  return true;
}

bool same_group(const Group& a, const Group& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

Group join(const Group& a, const Group& b) {
  SubgroupBuilder sb(a);
  for (const Perm& x : b.generators())
    sb.add(x);
  return sb.build();
}

Group conjugate(const Group& h, const Perm& g) {
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& x : h.generators())
    gens.push_back(x.conjugate(g));
  return Group::generated(h.degree(), std::move(gens));
}

Group cyclic_subgroup(const Perm& g) {
  return Group::generated(g.degree(), {g});
}

} // namespace picky
