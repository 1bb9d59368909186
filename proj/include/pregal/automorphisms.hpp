#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pregal/perm_group.hpp"

namespace pregal {

struct AutomorphismGroup {
  PermGroup group;
  std::vector<IndexMap> automorphisms;  // sorted, identity first
  std::size_t center_order = 1;

  std::size_t order() const noexcept { return automorphisms.size(); }
  std::size_t inner_order() const noexcept { return group.order() / center_order; }
  std::size_t outer_order() const noexcept { return order() / inner_order(); }
};

/// All automorphisms, by backtracking over generator images restricted to
/// elements of equal order and class size. Throws BoundExceeded when |G|
/// exceeds bounds().max_automorphism_order.
AutomorphismGroup automorphism_group(const PermGroup& g);
std::size_t outer_order(const PermGroup& g);

/// An isomorphism g -> h as an element-index map, if one exists.
std::optional<IndexMap> find_isomorphism(const PermGroup& g, const PermGroup& h);
bool is_isomorphic(const PermGroup& g, const PermGroup& h);

/// Exhaustive check of the multiplication table.
bool is_automorphism(const PermGroup& g, const IndexMap& m);
IndexMap inner_automorphism(const PermGroup& g, ElementIndex x);  // y -> x y x^{-1}
IndexMap identity_map(std::size_t n);
IndexMap compose(const IndexMap& outer, const IndexMap& inner);  // outer after inner
IndexMap invert(const IndexMap& m);

/// Aut(G) as a permutation group on the element indices of G.
PermGroup automorphisms_as_group(const AutomorphismGroup& aut);

/// Canonical key of the Inn(G)-coset of an automorphism: the smallest map in
/// {a o inn(x)}.
IndexMap outer_class_key(const PermGroup& g, const IndexMap& a);

}  // namespace pregal
