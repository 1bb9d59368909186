#pragma once

#include <vector>

#include "pregal/automorphisms.hpp"
#include "pregal/perm_group.hpp"

namespace pregal {

/// Nor_{S_d}(G) for G <= S_d, d = g.degree(). Brute force over S_d when
/// d <= bounds().max_symmetric_degree; otherwise built from Aut(G), which
/// requires G transitive.
PermGroup symmetric_normalizer(const PermGroup& g);

PermGroup symmetric_normalizer_bruteforce(const PermGroup& g);
/// Transitive G only: omega(x.0) = alpha(x).p for alpha in Aut(G) with
/// alpha(G_0) = G_p.
PermGroup symmetric_normalizer_via_automorphisms(const PermGroup& g);

/// Cen_{S_d}(G), as a subgroup of the given normalizer.
Subgroup symmetric_centralizer(const PermGroup& normalizer, const PermGroup& g);

/// Conjugation action of `by` (normalizing g) on the element indices of g.
IndexMap induced_automorphism(const PermGroup& g, const Perm& by);

/// Distinct automorphisms of g induced by conjugation in Nor_{S_d}(G), i.e.
/// Nor/Cen as a subgroup of Aut(G). Sorted, identity first.
std::vector<IndexMap> normalizer_automorphisms(const PermGroup& g);

}  // namespace pregal
