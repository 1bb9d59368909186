#pragma once

#include <vector>

#include "pregal/extension.hpp"

namespace pregal {

/// Index-preserving bijection between F_G(A) = {H ≤ G : HA is a group} and
/// N_Γ(A) = {H' : A ≤ H' ≤ Γ} for a factorization Γ = GA.
struct ZSBijection {
  std::vector<Subgroup> f_domain;  // F_G(A), canonical order
  std::vector<Subgroup> n_domain;  // N_Γ(A), canonical order
  std::vector<std::size_t> forward;   // f_domain[i] -> n_domain[forward[i]]
  std::vector<std::size_t> backward;  // n_domain[j] -> f_domain[backward[j]]
};

ZSBijection zs_subgroup_bijection(const PermGroup& gamma, const Subgroup& g, const Subgroup& a);
/// H -> H·A (must be a subgroup).
Subgroup zs_forward(const Subgroup& h, const Subgroup& a);
/// H' -> G ∩ H'.
Subgroup zs_backward(const Subgroup& g, const Subgroup& h2);

struct CorrespondenceRow {
  Subgroup h;               // H ≤ G
  Subgroup field_subgroup;  // H·Γ_E, the group of E^H
  std::size_t subdegree = 0;     // [E : E^H] = |H|
  std::size_t field_degree = 0;  // [E^H : k] = |Γ| / |H·Γ_E|
};

struct CorrespondenceTable {
  ExtensionModel model;
  Subgroup complement;
  std::vector<CorrespondenceRow> rows;
};

/// Throws NotAComplement unless complement is a complement of Γ_E.
CorrespondenceTable correspondence_table(const ExtensionModel& model, const Subgroup& complement);

struct DescentCertificate {
  Subgroup field_subgroup;  // h·Γ_E
  PermGroup quotient;       // complement / h, the pre-Galois group of E^H/k
  std::size_t automorphisms_checked = 0;
};

/// Requires complement normal in Γ (NotNormalComplement) and h characteristic
/// in it (NotCharacteristic).
DescentCertificate characteristic_descent(const ExtensionModel& model, const Subgroup& complement,
                                          const Subgroup& h);

struct CrossCorrespondence {
  std::vector<std::pair<Subgroup, Subgroup>> pairs;  // H -> (H·A) ∩ G'
  bool bijective = false;
  bool index_preserving = false;
};

CrossCorrespondence cross_correspondence(const ExtensionModel& model, const Subgroup& l_complement,
                                         const Subgroup& l2_complement);

}  // namespace pregal
