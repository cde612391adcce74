#include "picky/conjecture.hpp"

#include <algorithm>
#include <tuple>

#include "picky/backtrack.hpp"
#include "picky/errors.hpp"
#include "picky/structure.hpp"
#include "picky/util.hpp"

namespace picky {

using nlohmann::json;

std::string level_name(Level l) { return l == Level::basic ? "basic" : "plus"; }

Level parse_level(const std::string& s) {
  if (s == "basic")
    return Level::basic;
  if (s == "plus")
    return Level::plus;
  throw InputError("unknown level '" + s + "' (expected basic or plus)");
}

namespace {

auto tag_key(const CharTag& t) {
  return std::tie(t.degree_p_part.p, t.degree_p_part.e, t.value_field, t.value_p_part,
                  t.local_field);
}

CharTag basic_part(const CharTag& t) { return {t.degree_p_part, t.value_field, {}, {}}; }

} // namespace

bool operator==(const CharTag& a, const CharTag& b) { return tag_key(a) == tag_key(b); }

bool operator<(const CharTag& a, const CharTag& b) {
  if (!(a.degree_p_part == b.degree_p_part))
    return a.degree_p_part < b.degree_p_part;
  if (a.value_field != b.value_field)
    return a.value_field < b.value_field;
  if (a.value_p_part != b.value_p_part)
    return a.value_p_part < b.value_p_part;
  return a.local_field < b.local_field;
}

json CharTag::to_json() const {
  json j{{"degree_p_part", degree_p_part.to_json()}, {"value_field", value_field.to_json()}};
  if (value_p_part)
    j["value_p_part"] = value_p_part->to_json();
  if (local_field)
    j["local_field"] = local_field->to_json();
  return j;
}

CharTag char_tag(const CharacterTable& t, std::size_t row, std::size_t k, std::uint64_t p,
                 const TagOptions& opt) {
  const Cyclotomic& v = t.values.at(row).at(k);
  if (v.is_zero())
    throw PreconditionError("char_tag: character vanishes on the class");
  CharTag tag;
  tag.degree_p_part = PPart{p, mpq_class(static_cast<long>(valuation(t.degree(row), p)))};
  tag.value_field = value_field(v);
  if (opt.level == Level::plus) {
    PPart a = p_part(v, p);
    if (opt.flip_alpha)
      a.e = -a.e;
    tag.value_p_part = a;
    tag.local_field = local_field_tag(character_field(t.values[row]), p, opt.local_modulus);
  }
  return tag;
}

std::vector<CharTag> tag_multiset(const CharacterTable& t, std::size_t k, std::uint64_t p,
                                  const TagOptions& opt) {
  std::vector<CharTag> out;
  for (std::size_t r : irr_x(t, k))
    out.push_back(char_tag(t, r, k, p, opt));
  std::sort(out.begin(), out.end());
  return out;
}

Perm PointRestriction::apply(const Perm& g) const {
  std::vector<Point> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point y = g[points[i]];
    auto it = std::lower_bound(points.begin(), points.end(), y);
    if (it == points.end() || *it != y)
      throw PreconditionError("restriction: element moves the support");
    img[i] = static_cast<Point>(it - points.begin());
  }
  return Perm(std::move(img));
}

PointRestriction restrict_to_moved_points(const Group& h) {
  PointRestriction r;
  std::vector<bool> moved(h.degree(), false);
  for (const Perm& s : h.generators())
    for (std::size_t i = 0; i < s.degree(); ++i)
      if (s[i] != i)
        moved[i] = true;
  for (std::size_t i = 0; i < moved.size(); ++i)
    if (moved[i])
      r.points.push_back(static_cast<Point>(i));
  std::vector<Perm> gens;
  for (const Perm& s : h.generators())
    gens.push_back(r.apply(s));
  r.group = Group::generated(r.points.size(), std::move(gens));
  if (r.group.order() != h.order())
    throw InternalInconsistency("restriction changed the group order");
  return r;
}

json ConjectureReport::to_json() const {
  json tg = json::array(), ts = json::array();
  for (const CharTag& t : tags_group)
    tg.push_back(t.to_json());
  for (const CharTag& t : tags_sub)
    ts.push_back(t.to_json());
  json j{{"p", p},
         {"group_order", group_order},
         {"class",
          {{"index", class_index},
           {"element_order", element_order},
           {"centralizer_order", centralizer_order},
           {"representative", x.images()}}},
         {"subnormaliser",
          {{"order", sub_order},
           {"picky", picky},
           {"class_index", sub_class_index},
           {"num_classes", sub_num_classes}}},
         {"level", level_name(level)},
         {"alpha_exponent_sign", flip_alpha ? -1 : 1},
         {"local_modulus", local_modulus},
         {"irr_x_group", tags_group.size()},
         {"irr_x_sub", tags_sub.size()},
         {"tags_group", tg},
         {"tags_sub", ts},
         {"basic_holds", basic_holds},
         {"plus_holds", plus_holds},
         {"holds", holds()}};
  if (mismatch_index) {
    const std::size_t i = *mismatch_index;
    j["first_mismatch"] = {
        {"position", i},
        {"group", i < tags_group.size() ? tags_group[i].to_json() : json(nullptr)},
        {"sub", i < tags_sub.size() ? tags_sub[i].to_json() : json(nullptr)}};
  }
  return j;
}

struct ConjectureChecker::SubData {
  Group group;
  std::optional<PointRestriction> restriction;
  std::shared_ptr<ClassData> cd;
  std::shared_ptr<CharacterTable> table;
};

ConjectureChecker::ConjectureChecker(const Group& g, std::uint64_t p, const Bounds& bounds)
    : g_(g), p_(p), bounds_(bounds) {
  if (!is_prime(p))
    throw InputError("conjecture: " + std::to_string(p) + " is not prime");
  cd_ = std::make_shared<ClassData>(g, bounds);
  table_ = std::make_shared<CharacterTable>(character_table(*cd_, bounds));
  sys_ = std::make_shared<SylowSystem>(g, p, bounds);
}

const ConjectureChecker::SubData& ConjectureChecker::sub_data(const Group& s) const {
  auto& bucket = subs_[subgroup_key(s)];
  for (const auto& d : bucket)
    if (same_group(d->group, s))
      return *d;
  auto d = std::make_shared<SubData>();
  d->group = s;
  if (s.order() == g_.order()) {
    d->cd = cd_;
    d->table = table_;
  } else {
    d->restriction = restrict_to_moved_points(s);
    d->cd = std::make_shared<ClassData>(d->restriction->group, bounds_);
    d->table = std::make_shared<CharacterTable>(character_table(*d->cd, bounds_));
  }
  bucket.push_back(d);
  return *d;
}

ConjectureReport ConjectureChecker::check(std::size_t k, Level level, bool flip_alpha) const {
  if (k >= cd_->size())
    throw InputError("conjecture: class index out of range");
  const ConjugacyClass& c = (*cd_)[k];
  require_p_element(g_, p_, c.rep);
  const SubnormaliserResult sub = subnormaliser(*sys_, c.rep);
  const SubData& sd = sub_data(sub.subgroup);

  ConjectureReport r;
  r.p = p_;
  r.group_order = g_.order();
  r.class_index = k;
  r.x = c.rep;
  r.element_order = c.element_order;
  r.centralizer_order = c.centralizer_order;
  r.sub_order = sub.subgroup.order();
  r.picky = sub.is_picky;
  r.sub_num_classes = sd.cd->size();
  r.level = level;
  r.flip_alpha = flip_alpha;
  r.local_modulus = local_modulus(cd_->exponent(), p_);

  const Perm xs = sd.restriction ? sd.restriction->apply(c.rep) : c.rep;
  r.sub_class_index = sd.cd->class_of(xs);
  const Group& sg = sd.restriction ? sd.restriction->group : g_;
  if (!conjugating_element(sg, (*sd.cd)[r.sub_class_index].rep, xs))
    throw InternalInconsistency("conjecture: class of x in the subnormaliser not confirmed");

  TagOptions opt{Level::plus, r.local_modulus, flip_alpha};
  r.tags_group = tag_multiset(*table_, k, p_, opt);
  r.tags_sub = tag_multiset(*sd.table, r.sub_class_index, p_, opt);
  r.plus_holds = r.tags_group == r.tags_sub;

  auto basic = [](const std::vector<CharTag>& v) {
    std::vector<CharTag> out;
    for (const CharTag& t : v)
      out.push_back(basic_part(t));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto bg = basic(r.tags_group), bs = basic(r.tags_sub);
  r.basic_holds = bg == bs;

  if (level == Level::basic) {
    r.tags_group = bg;
    r.tags_sub = bs;
  }
  if (!r.holds()) {
    std::size_t i = 0;
    while (i < r.tags_group.size() && i < r.tags_sub.size() &&
           r.tags_group[i] == r.tags_sub[i])
      ++i;
    r.mismatch_index = i;
  }
  return r;
}

ConjectureReport check_conjecture(const Group& g, std::uint64_t p, const Perm& x,
                                  Level level, const Bounds& bounds, bool flip_alpha) {
  ConjectureChecker c(g, p, bounds);
  return c.check(c.classes().class_of(x), level, flip_alpha);
}

std::uint64_t p_prime_degree_count(const CharacterTable& t, std::uint64_t p) {
  std::uint64_t n = 0;
  for (std::size_t r = 0; r < t.num_chars(); ++r)
    if (t.degree(r) % p != 0)
      ++n;
  return n;
}

json McKayCount::to_json() const {
  return json{{"p", p},
              {"group_count", group_count},
              {"normalizer_count", normalizer_count},
              {"normalizer_order", normalizer_order},
              {"equal", equal()}};
}

McKayCount mckay_count(const Group& g, std::uint64_t p, const Bounds& bounds) {
  if (!is_prime(p))
    throw InputError("mckay: " + std::to_string(p) + " is not prime");
  McKayCount m;
  m.p = p;
  const SylowSystem sys(g, p, bounds);
  m.normalizer_order = sys.normalizer().order();
  m.group_count = p_prime_degree_count(character_table(g, bounds), p);
  const PointRestriction r = restrict_to_moved_points(sys.normalizer());
  m.normalizer_count = p_prime_degree_count(character_table(r.group, bounds), p);
  return m;
}

} // namespace picky
