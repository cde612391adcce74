#pragma once

#include <string>

#include "picky/zoo/matrix.hpp"

namespace picky::zoo {

/// Canonical data-file name, e.g. "SU3_3", "Sp4_3", "Sz8".
std::string matrix_group_name(Family f, unsigned n, std::uint64_t q);

/// Builds validated generators for a classical group. Candidates are
/// transvections (SL, GL, Sp, SU), products of two reflections (SO) or the
/// standard Suzuki matrices, taken in a fixed order and kept only when they
/// enlarge the group, until the order formula is reached.
MatrixGroup construct_classical(Family f, unsigned n, std::uint64_t q);

} // namespace picky::zoo
