#pragma once

#include <string_view>

#include "ends/group.hpp"

namespace ends {

/// Builds a group from its textual spec. Constructors:
///   free(k)  cyclic(n)  sym(n)  free_abelian(d)
///   free_product([G1, G2, ...])
///   ascending_union(sum_z2, N)  ascending_union(sym, N)
///   ascending_union([[perm, ...], [perm, ...], ...])   (one list per level,
///       permutations in 1-based cycle notation, e.g. "(1 2)(3 4)")
/// Unknown constructors raise DomainError naming the constructor.
GroupPtr parse_group_spec(std::string_view text);

}  // namespace ends
