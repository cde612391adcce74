#pragma once

#include <memory>
#include <string>

#include "picky/group.hpp"
#include "picky/zoo/matrix.hpp"

namespace picky::zoo {

/// A group built from a recipe string, with a canonical id.
struct BuiltGroup {
  Group group;
  std::string id;
  std::string provenance;
  /// Classical groups only: the action `group` comes from, and the action
  /// on vectors (the same object when `group` acts on vectors).
  std::shared_ptr<const MatrixAction> action = nullptr;
  std::shared_ptr<const MatrixAction> vectors = nullptr;
};

/// Recipe grammar:
///   recipe := NAME | NAME '(' arg (',' arg)* ')' ['@' action] | path.json
/// NAME is one of Sym, Alt, Cyclic, Dihedral, Q8, Abelian, AGL1, Product,
/// Wreath, CentralQuotient, a classical family (SL, GL, SU, Sp, SO,
/// SOplus, SOminus, Sz, or a P-prefixed projective form) or a registry name.
/// Classical groups default to projective points when no nontrivial scalar
/// lies in the group and to vectors otherwise; action is vectors|projective.
BuiltGroup build_group(const std::string& recipe);

} // namespace picky::zoo
