#pragma once

#include <string>
#include <vector>

#include "pregal/perm_group.hpp"

namespace pregal {

/// Group shadow of a separable extension E/k: Gamma = Gal(Ê/k) with the
/// core-free stabilizer Gamma_E = Gal(Ê/E). degree() is [E:k].
class ExtensionModel {
 public:
  /// Throws NotCoreFree when gamma_e contains a nontrivial normal subgroup
  /// of gamma, NotSubgroup when gamma_e belongs to another group.
  ExtensionModel(PermGroup gamma, Subgroup gamma_e);

  /// Replaces gamma by gamma / core(gamma_e), realized as the action on the
  /// cosets of gamma_e; gamma_e becomes the stabilizer of the trivial coset.
  static ExtensionModel from_quotient(const PermGroup& gamma, const Subgroup& gamma_e);
  /// Transitive gamma with the stabilizer of `point`.
  static ExtensionModel from_stabilizer(const PermGroup& gamma, Point point);

  const PermGroup& gamma() const noexcept { return gamma_; }
  const Subgroup& gamma_e() const noexcept { return gamma_e_; }
  std::size_t degree() const noexcept { return gamma_.order() / gamma_e_.order(); }

 private:
  PermGroup gamma_;
  Subgroup gamma_e_;
};

/// One isomorphism class of complements: a representative (the canonical
/// smallest member of the class) and its label from catalog identify().
struct GroupClass {
  std::string name;
  Subgroup representative;
  std::size_t count = 0;  // complements in this class
};

struct PreGaloisReport {
  std::vector<Subgroup> complements;
  std::vector<Subgroup> normal_complements;
  std::vector<GroupClass> potential_groups;
  std::vector<GroupClass> pre_galois_groups;
  bool is_potentially_galois = false;
  bool is_pre_galois = false;
};

/// |gamma| = |u||v| and u ∩ v = 1.
bool is_complement(const PermGroup& gamma, const Subgroup& u, const Subgroup& v);
std::vector<Subgroup> complements(const PermGroup& gamma, const Subgroup& u);
std::vector<Subgroup> normal_complements(const PermGroup& gamma, const Subgroup& u);

PreGaloisReport analyze(const ExtensionModel& model);

/// Minimal field L = Ê^G for a complement G. Gal(Ê/L) = G, [L:k] = |Γ|/|G|.
struct MinimalField {
  Subgroup complement;
  std::size_t field_degree = 0;
  bool roundtrip = false;  // G(L(G)) == G re-checked
  bool galois_over_k = false;
};
std::vector<MinimalField> minimal_fields(const ExtensionModel& model);

/// <a ∪ b>, the group of the minimal L_0 inside L. b must be normal.
Subgroup composite_minimalization(const PermGroup& delta, const Subgroup& a, const Subgroup& b);

/// Faithful model of N ⋊ A acting on N ⊔ A: (n, a) sends m -> n·α_a(m) on
/// the first |N| points and b -> ab on the rest.
struct SemidirectProduct {
  PermGroup group;
  Subgroup normal;      // copy of N
  Subgroup complement;  // copy of A
  std::vector<Perm> embed_n;  // element index of N -> permutation
  std::vector<Perm> embed_a;  // element index of A -> permutation
  std::vector<IndexMap> action;
};

/// `action[i]` is α for a.element(i), an automorphism of n on element
/// indices. Throws NotAHomomorphism if a -> Aut(n) is not a homomorphism.
SemidirectProduct semidirect_product(const PermGroup& n, const PermGroup& a,
                                     const std::vector<IndexMap>& action);
/// Extends automorphisms given on a.generators() to a full action table.
std::vector<IndexMap> action_from_generator_images(const PermGroup& n, const PermGroup& a,
                                                   const std::vector<IndexMap>& generator_auts);
std::vector<IndexMap> trivial_action(const PermGroup& n, const PermGroup& a);

/// G ⋊ A ≅ (G × 1) × A* ≅ G × A for G with trivial Out(G) and split centre.
struct SplitCertificate {
  SemidirectProduct product;
  Subgroup a_star;
  /// c(a) in G with α_a = conjugation by c(a); A* = {(c(a)^{-1}, a)}.
  std::vector<ElementIndex> inner_part;
  PermGroup direct;  // G × A on the disjoint union
  IndexMap isomorphism;  // product.group -> direct
  bool trivial_intersection = false;
  bool commutes = false;
  bool generates = false;
};
SplitCertificate split_to_direct(const PermGroup& g, const PermGroup& a,
                                 const std::vector<IndexMap>& action);

bool is_complete_group(const PermGroup& g);

/// φ: G -> G' with φ(x) = xγ, γ ∈ U, for two normal complements of U.
struct AntiIsomorphismTranscript {
  std::vector<std::pair<ElementIndex, ElementIndex>> phi;  // (x, φ(x)), gamma indices
  Subgroup intersection;
  bool gamma_unique = false;
  bool bijective = false;
  bool cocycle = false;                // φ(xy) = x φ(y) x^{-1} φ(x)
  bool identity_on_intersection = false;
  bool induced_anti_isomorphism = false;
  bool inverse_is_isomorphism = false; // x -> φ(x)^{-1}; expected when G ∩ G' = 1
};
AntiIsomorphismTranscript anti_isomorphism(const PermGroup& gamma, const Subgroup& u,
                                           const Subgroup& g, const Subgroup& g2);

/// A regular subgroup of Perm(Γ/Γ_E) normalized by λ(Γ).
struct HopfStructure {
  PermGroup n;
  std::string type;
  bool inside_gamma = false;  // N ≤ λ(Γ): an almost-classically-Galois witness
};
struct HopfResult {
  PermGroup lambda;  // λ(Γ) on the cosets
  std::vector<HopfStructure> structures;
};
HopfResult hopf_regular_subgroups(const ExtensionModel& model);

/// Γ_E ∩ Cen_Γ(G) = 1 for a normal complement G. Reported, never assumed.
bool faithful_action_check(const ExtensionModel& model, const Subgroup& g);

}  // namespace pregal
