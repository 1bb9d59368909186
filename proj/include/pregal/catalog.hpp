#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pregal/perm_group.hpp"

namespace pregal {

PermGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n acting on n points (n >= 3).
PermGroup dihedral_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
/// The normal Klein four subgroup of S_4: double transpositions.
PermGroup klein_four_group();
PermGroup quaternion_group();
/// AGL(1,5) = C_5 : C_4 on 5 points.
PermGroup frobenius_twenty();

/// Named fixture groups: "C<n>", "D<2n>", "S<n>", "A<n>", "V4", "Q8", "F20",
/// "C2^3", products joined with 'x' ("C4xC2", "A5xA5") and "reg:<name>" for
/// the regular representation. Throws InvalidInput for unknown names.
PermGroup catalog_group(std::string_view name);
std::vector<std::string> catalog_names();

/// Isomorphism-type label from the built-in list of small groups, or
/// "order<N>" when the group is not listed.
std::string identify(const PermGroup& g);

/// Every group of order n up to isomorphism, n <= 8, as (name, regular
/// permutation model).
std::vector<std::pair<std::string, PermGroup>> groups_of_order(std::size_t n);

}  // namespace pregal
