#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "picky/bounds.hpp"
#include "picky/chartab.hpp"
#include "picky/classes.hpp"
#include "picky/cyclo.hpp"
#include "picky/group.hpp"
#include "picky/subnorm.hpp"
#include "picky/sylow.hpp"

namespace picky {

/// basic: degree p-part and value field. plus: also the p-part of the value
/// and the local field of the character over Q_p.
enum class Level { basic, plus };
std::string level_name(Level l);
Level parse_level(const std::string& s);

/// Per-character invariants compared between G and Sub_G(x).
struct CharTag {
  PPart degree_p_part;
  AbelianFieldTag value_field;
  std::optional<PPart> value_p_part;
  std::optional<LocalTag> local_field;

  friend bool operator==(const CharTag& a, const CharTag& b);
  friend bool operator<(const CharTag& a, const CharTag& b);
  nlohmann::json to_json() const;
};

struct TagOptions {
  Level level = Level::plus;
  /// Modulus of the local tags; shared by both groups of a comparison.
  std::uint64_t local_modulus = 1;
  /// Negate the exponent of the value p-part. Both sides flip together, so
  /// verdicts must not change.
  bool flip_alpha = false;
};

CharTag char_tag(const CharacterTable& t, std::size_t row, std::size_t k, std::uint64_t p,
                 const TagOptions& opt);
/// Sorted tags of the rows in irr_x(t, k).
std::vector<CharTag> tag_multiset(const CharacterTable& t, std::size_t k, std::uint64_t p,
                                  const TagOptions& opt);

/// H on its moved points, relabelled 0..m-1 in increasing order.
struct PointRestriction {
  Group group;
  std::vector<Point> points;
  /// Restriction of an element that stabilises the moved-point set.
  Perm apply(const Perm& g) const;
};
PointRestriction restrict_to_moved_points(const Group& h);

struct ConjectureReport {
  std::uint64_t p = 2;
  std::uint64_t group_order = 1;
  std::size_t class_index = 0;
  Perm x;
  std::uint64_t element_order = 1;
  std::uint64_t centralizer_order = 1;
  std::uint64_t sub_order = 1;
  bool picky = false;
  std::size_t sub_class_index = 0;
  std::uint64_t sub_num_classes = 0;
  std::uint64_t local_modulus = 1;
  Level level = Level::plus;
  bool flip_alpha = false;
  std::vector<CharTag> tags_group;
  std::vector<CharTag> tags_sub;
  bool basic_holds = false;
  bool plus_holds = false;
  /// First position where the sorted multisets differ, with both tags.
  std::optional<std::size_t> mismatch_index;

  bool holds() const { return level == Level::basic ? basic_holds : plus_holds; }
  nlohmann::json to_json() const;
};

/// Caches the class data, table and Sylow system of G so many classes can
/// be checked against one group. Tables of subnormalisers are cached by
/// subgroup.
class ConjectureChecker {
public:
  ConjectureChecker(const Group& g, std::uint64_t p, const Bounds& bounds = {});

  const ClassData& classes() const { return *cd_; }
  const CharacterTable& table() const { return *table_; }
  const SylowSystem& sylow_system() const { return *sys_; }

  /// Compares the tag multisets of Irr_x(G) and Irr_x(Sub_G(x)) for the
  /// class representative x_k, which must be a p-element. The report always
  /// carries both verdicts; `level` picks the headline one.
  ConjectureReport check(std::size_t k, Level level, bool flip_alpha = false) const;

private:
  struct SubData;
  const SubData& sub_data(const Group& s) const;

  Group g_;
  std::uint64_t p_;
  Bounds bounds_;
  std::shared_ptr<ClassData> cd_;
  std::shared_ptr<CharacterTable> table_;
  std::shared_ptr<SylowSystem> sys_;
  mutable std::map<std::uint64_t, std::vector<std::shared_ptr<SubData>>> subs_;
};

ConjectureReport check_conjecture(const Group& g, std::uint64_t p, const Perm& x,
                                  Level level, const Bounds& bounds = {},
                                  bool flip_alpha = false);

/// Number of p'-degree irreducible characters of G and of N_G(P).
struct McKayCount {
  std::uint64_t p = 2;
  std::uint64_t group_count = 0;
  std::uint64_t normalizer_count = 0;
  std::uint64_t normalizer_order = 1;
  bool equal() const { return group_count == normalizer_count; }
  nlohmann::json to_json() const;
};
McKayCount mckay_count(const Group& g, std::uint64_t p, const Bounds& bounds = {});
std::uint64_t p_prime_degree_count(const CharacterTable& t, std::uint64_t p);

} // namespace picky
