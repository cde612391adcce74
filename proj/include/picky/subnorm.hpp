#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picky/bounds.hpp"
#include "picky/classes.hpp"
#include "picky/group.hpp"
#include "picky/sylow.hpp"

namespace picky {

enum class SubMethod { generation, fusion, bruteforce };
std::string method_name(SubMethod m);
SubMethod parse_method(const std::string& s);

struct SubnormaliserResult {
  Perm x;
  std::uint64_t p;
  Group subgroup;
  SubMethod method;
  bool is_picky;
  /// generation: Sylow subgroups containing x; fusion: elements g with x^g
  /// in P found (scan) or fused classes searched; bruteforce: raw size of
  /// {g : <x> subnormal in <g, x>} (closure is not assumed).
  std::uint64_t witness_count;
};

/// <N_G(P^t) : x in P^t>.
SubnormaliserResult subnormaliser(const SylowSystem& sys, const Perm& x);
SubnormaliserResult subnormaliser(const Group& g, std::uint64_t p, const Perm& x,
                                  const Bounds& bounds = {});

/// <g : x^g in Q> for a Sylow Q containing x. Full element scan when
/// |G| <= bounds.fusion_scan; otherwise <N_G(Q), C_G(x), t_y> with one
/// conjugator t_y per N_G(Q)-orbit on Q n x^G.
SubnormaliserResult subnormaliser_fusion(const SylowSystem& sys, const Perm& x,
                                         const Bounds& bounds = {});
SubnormaliserResult subnormaliser_fusion(const Group& g, std::uint64_t p, const Perm& x,
                                         const Bounds& bounds = {});

/// Closure of {g in G : <x> subnormal in <g, x>}, each candidate decided by
/// is_subnormal. Throws BoundExceeded when |G| > bounds.brute_force.
SubnormaliserResult subnormaliser_bruteforce(const Group& g, std::uint64_t p,
                                             const Perm& x, const Bounds& bounds = {});

/// x lies in exactly one Sylow p-subgroup. Also compares the subnormaliser
/// with N_G(P) and throws InternalInconsistency if the two criteria differ.
bool is_picky(const SylowSystem& sys, const Perm& x);
bool is_picky(const Group& g, std::uint64_t p, const Perm& x, const Bounds& bounds = {});

struct PickyRow {
  std::size_t class_index;
  Perm rep;
  std::uint64_t element_order;
  std::uint64_t class_size;
  std::uint64_t centralizer_order;
  std::uint64_t sylows_containing;
  bool picky;
  std::uint64_t sub_order;
  std::vector<SubMethod> methods;
  bool methods_agree;
};

struct PickyReport {
  std::uint64_t group_order;
  std::uint64_t p;
  std::uint64_t sylow_order;
  std::uint64_t sylow_normalizer_order;
  std::uint64_t sylow_count;
  std::vector<PickyRow> rows;
};

/// One row per class of nontrivial p-elements, in class order. Generation
/// and fusion always run; brute force joins when `with_bruteforce` and
/// |G| <= bounds.brute_force.
PickyReport picky_classes(const Group& g, std::uint64_t p, const Bounds& bounds = {},
                          bool with_bruteforce = false);
PickyReport picky_classes(const ClassData& cd, const SylowSystem& sys,
                          const Bounds& bounds = {}, bool with_bruteforce = false);

/// Sub_G(x) = G for every p-element class representative x.
bool almost_normal(const Group& g, std::uint64_t p, const Bounds& bounds = {});

} // namespace picky
