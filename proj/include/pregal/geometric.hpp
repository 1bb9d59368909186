#pragma once

#include <string>
#include <vector>

#include "pregal/extension.hpp"
#include "pregal/homomorphism.hpp"

namespace pregal {

/// (g_1, ..., g_r) with product one generating a transitive G ≤ S_d.
class BranchCycleDescription {
 public:
  /// Throws InvalidInput when the product is not one or the generated group
  /// is intransitive. Labels default to "t1".."tr".
  BranchCycleDescription(std::vector<Perm> tuple, std::vector<std::string> labels = {});

  std::size_t degree() const noexcept { return group_.degree(); }
  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Perm>& tuple() const noexcept { return tuple_; }
  const std::vector<std::string>& branch_labels() const noexcept { return labels_; }

  /// Simultaneous conjugation; invariants are rechecked.
  BranchCycleDescription conjugated_by(const Perm& omega) const;

 private:
  PermGroup group_;
  std::vector<Perm> tuple_;
  std::vector<std::string> labels_;
};

struct MonodromyReport {
  PermGroup group;
  bool is_geometrically_galois = false;  // regular action
  PermGroup normalizer;                  // Nor_{S_d}(G)
  PermGroup constant_extension_bound;    // Nor_{S_d}(G) / G
  bool bound_matches_aut = false;        // regular case: Nor/G ≅ Aut(G)
};
MonodromyReport monodromy_analysis(const BranchCycleDescription& bcd);

/// Finite model of 1 -> Π̄ -> Π -> Q -> 1 with section s, cover φ: Π -> G
/// and Galois representation ψ: Q -> G.
struct ArithmeticModel {
  PermGroup pi;
  Subgroup pibar;
  PermGroup q;
  GroupHom quotient_map;  // Π -> Q, kernel Π̄
  GroupHom section;       // Q -> Π
  GroupHom phi;           // Π -> G
  GroupHom psi;           // Q -> G
  bool rational_point = true;  // φ ∘ s trivial

  const PermGroup& g() const noexcept { return phi.target(); }
  /// Checks every invariant; throws InvalidInput naming the first failure.
  void validate() const;
};

/// Π = G × Q, Π̄ = G × 1, φ and the quotient map the projections, s(τ) =
/// (1, τ). `psi_generator_images` are the images of q.generators().
ArithmeticModel twisting_model(const PermGroup& g, const PermGroup& q,
                               const std::vector<Perm>& psi_generator_images);

/// τ̃(x·s(τ)) : g -> φ(x)·g·ψ(τ)^{-1}, as permutations of G's element indices.
struct TwistedRepresentation {
  std::vector<Perm> image;  // per element index of Π
  PermGroup image_group;
  Subgroup kernel;
  bool homomorphism_verified = false;
};
/// Throws NoRationalPoint, CenterNotTrivial.
TwistedRepresentation twist(const ArithmeticModel& model);

struct EtaleComponent {
  Subgroup stabilizer;  // in Q
  std::size_t degree = 0;
  std::vector<Point> orbit;
};
struct EtaleAlgebra {
  std::vector<EtaleComponent> components;
  std::size_t total_degree = 0;
  bool is_field = false;
};
/// Orbits of Q acting through (τ̃ or φ) ∘ s: on G's elements when twisted,
/// on {0..d-1} otherwise.
EtaleAlgebra specialize(const ArithmeticModel& model, bool use_twisted);

struct TransferReport {
  Subgroup complement;
  bool factorization_holds = false;  // Γ = G·Γ_E as sets
  bool pre_galois_transfer = false;  // G normal
  PreGaloisReport restated;
};
TransferReport specialization_transfer(const ExtensionModel& model, const Subgroup& complement);

/// Image of x -> (φ_1(x), ..., φ_n(x)) on the disjoint union of the targets'
/// domains. Throws NotSurjective.
PermGroup compositum_image(const PermGroup& pi, const std::vector<GroupHom>& phis);

struct PowerCertificate {
  std::size_t n = 0;                  // number of distinct kernels
  std::vector<std::size_t> distinct;  // indices into the input maps
  PermGroup image;                    // compositum of the distinct subfamily
  std::size_t simple_order = 0;
  bool full_product = false;          // |image| == |G|^n
};
/// All maps must be onto copies of one nonabelian simple group (NotSimple).
PowerCertificate power_of_simple(const PermGroup& pi, const std::vector<GroupHom>& phis);

/// Nor_{S_d}(G) / (G·Cen_{S_d}(G)) and its map into Out(G).
struct NorGCen {
  PermGroup normalizer;
  Subgroup centralizer;  // in normalizer
  Subgroup g_cen;        // G·Cen, in normalizer
  PermGroup nor_mod_cen; // Nor / Cen
  Subgroup g_cen_image;  // G·Cen / Cen inside nor_mod_cen
  PermGroup quotient;    // Nor / (G·Cen)
  std::vector<ElementIndex> quotient_of;  // normalizer index -> quotient index
  std::vector<ElementIndex> mod_cen_of;   // normalizer index -> nor_mod_cen index
  std::vector<IndexMap> out_classes;  // per quotient element: outer_class_key
  std::size_t out_order = 0;
  bool injective = false;
};
NorGCen nor_gcen_out(const PermGroup& g);

struct FieldOfModuliGroup {
  Subgroup h;                   // ψ̄^{-1}(G·Cen/Cen), normal in Q
  PermGroup q_mod_h;
  std::vector<ElementIndex> embedding;  // q_mod_h index -> NorGCen::quotient index
  std::size_t target_order = 0;
  bool injective = false;
};
/// `rep_generator_images` lift the images of q.generators() to Nor_{S_d}(G);
/// the map is taken modulo Cen. Throws NotAHomomorphism.
FieldOfModuliGroup field_of_moduli_group(const PermGroup& q, const std::vector<Perm>& rep_generator_images,
                                         const PermGroup& g);

}  // namespace pregal
