#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pregal/perm_group.hpp"

namespace pregal {

/// How G sits in S_d. Natural: G as given. Regular: the left regular
/// representation, where Nor_{S_d}(G) acts on G through Aut(G).
enum class Embedding { Natural, Regular };

struct ClassTuple {
  PermGroup group;
  std::vector<ConjClass> classes;  // C_1 .. C_r

  /// Throws InvalidInput when a class is empty or belongs to another group.
  void validate() const;
  std::vector<std::string> names() const;
};

/// Resolves class names ("2A", "5B", ...) against conjugacy_classes(g).
ClassTuple class_tuple(const PermGroup& g, const std::vector<std::string>& names);

using ClassVector = std::vector<ElementIndex>;  // element indices (g_1, ..., g_r)

/// Generating tuples with product one and g_i in C_i, lexicographic on
/// element indices. Throws BoundExceeded when prod |C_i| exceeds
/// bounds().max_tuple_space.
std::vector<ClassVector> tuple_solutions(const ClassTuple& ct);

/// Automorphisms of G induced by Nor_{S_d}(G): Nor/Cen for the natural
/// embedding, all of Aut(G) for the regular one. Identity first.
std::vector<IndexMap> embedding_automorphisms(const PermGroup& g, Embedding e);

struct RigidityReport {
  std::vector<ClassVector> tuples;
  std::vector<std::vector<std::size_t>> orbits;        // under the normalizer
  std::vector<std::vector<std::size_t>> inner_orbits;  // under Inn(G)
  bool is_weakly_rigid = false;
  bool is_rigid = false;
};
/// Throws EmptyTupleSet, BoundExceeded.
RigidityReport is_weakly_rigid(const ClassTuple& ct, Embedding e);

/// Index of the class of rep(C)^m, for every class of G.
std::vector<std::size_t> class_power_map(const PermGroup& g, long long m);

/// Integers in [1, exp(G)) coprime to exp(G).
std::vector<long long> unit_exponents(const PermGroup& g);

/// Lifts a unit residue mod d to the least positive integer m ≡ residue
/// (mod d) coprime to exp(G). Throws BadExponent when no such m exists or
/// when two lifts power the classes of G differently.
long long lift_unit_exponent(const PermGroup& g, long long residue, std::size_t d);

struct ExponentWitness {
  long long m = 1;
  bool weak = false;   // some ω works
  bool plain = false;  // ω = 1 works
  std::optional<IndexMap> automorphism;
};
struct RationalityReport {
  std::vector<ExponentWitness> exponents;
  bool weakly_rational = false;
  bool rational = false;
};
/// Throws BadExponent for exponents not coprime to exp(G).
RationalityReport is_weakly_rational(const ClassTuple& ct, Embedding e, const std::vector<long long>& exponents);

/// t_i^τ = t_{τ(i)} and χ(τ); branch_perm is 0-based.
struct GaloisActionData {
  struct Record {
    std::vector<std::size_t> branch_perm;
    long long chi = 1;
    auto operator<=>(const Record&) const = default;
  };
  std::vector<Record> records;

  /// Permutations of {0..r-1}, chi coprime to exp(G), closed under
  /// composition with chi taken mod exp(G). Throws InvalidInput / BadExponent.
  void validate(std::size_t r, std::size_t group_exponent) const;
};

struct KRationalReport {
  bool weakly_k_rational = false;
  bool k_rational = false;  // ω_τ = 1 for every record
  std::vector<std::optional<IndexMap>> witnesses;  // per record
};
/// Searches ω_τ with C_{τ(i)}^{χ(τ)} = ω_τ(C_i) for all i.
KRationalReport is_weakly_k_rational_triple(const ClassTuple& ct, Embedding e, const GaloisActionData& action);

/// One record per exponent (ω = 1 preferred, slots fixed where possible),
/// closed under composition. Throws NotWeaklyRational.
GaloisActionData construct_branch_assignment(const ClassTuple& ct, Embedding e,
                                             const std::vector<long long>& exponents);

struct RigidityCertificate {
  std::vector<std::string> classes;
  Embedding embedding = Embedding::Natural;
  std::size_t tuple_count = 0;
  std::size_t orbit_count_under_normalizer = 0;
  std::size_t inner_orbit_count = 0;
  bool is_weakly_rigid = false;
  bool is_rigid = false;
  std::optional<RationalityReport> rationality;  // when exponents were given
  GaloisActionData action;
  KRationalReport k_rationality;
  std::size_t aut_bound = 0;      // |Aut(G)|
  std::size_t nor_bound = 0;      // |Nor_{S_d}(G) / (G·Cen_{S_d}(G))|
  std::size_t out_bound = 0;      // |Out(G)|
  bool split_hypothesis = false;  // user asserts the split/cohomological hypothesis
  bool center_split = false;      // 1 -> Z(G) -> G -> Inn(G) -> 1 splits (checked)
  std::vector<std::string> conclusions;
};
RigidityCertificate rigidity_pipeline(const ClassTuple& ct, Embedding e, const std::vector<long long>& exponents,
                                      bool split_hypothesis = false);
RigidityCertificate rigidity_pipeline(const ClassTuple& ct, Embedding e, const GaloisActionData& action,
                                      bool split_hypothesis = false);

}  // namespace pregal
