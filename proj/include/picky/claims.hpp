#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "picky/bounds.hpp"

namespace picky {

/// A checkable statement about one group, stored as data/claims/<id>.json.
///
///   kind     subnormaliser | almost_normal | chartab | conjecture | mckay
///   group    recipe string
///   p        prime (all kinds but chartab)
///   select   which p-element classes: {} for all nontrivial ones, or any of
///            element_order, centralizer_order, jordan_type; jordan_type with
///            "sample": true draws seeded random elements instead of
///            enumerating classes
///   expect   kind-specific expected observations
struct Claim {
  std::string id;
  std::string statement;
  std::string kind;
  std::string group;
  std::uint64_t p = 0;
  nlohmann::json select = nlohmann::json::object();
  nlohmann::json expect = nlohmann::json::object();

  static Claim from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// All claims in `dir`, sorted by id. Throws InputError on a malformed file
/// or an id that differs from the file name.
std::vector<Claim> load_claims(const std::string& dir);
std::string default_claims_dir();
Claim find_claim(const std::vector<Claim>& claims, const std::string& id);

/// Recomputes a claim. The result document carries the observations, the
/// expectations, a list of failed expectations and a status of "pass",
/// "fail" or "skipped (bound)". It holds no timings, so reruns are
/// byte-identical.
/// `seed` drives sampling for claims that do not fix their own seed.
nlohmann::json reproduce_claim(const Claim& c, const Bounds& bounds = {},
                               std::uint64_t seed = 1);

} // namespace picky
