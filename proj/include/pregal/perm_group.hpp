#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pregal/perm.hpp"

namespace pregal {

using ElementIndex = std::uint32_t;

/// A map between element indices of two materialized groups. Used for
/// automorphisms, isomorphisms and homomorphisms.
using IndexMap = std::vector<ElementIndex>;

/// Finitely generated permutation group with its element set materialized in
/// lexicographic order of image arrays. Index 0 is always the identity.
///
/// Copies are cheap and share the immutable element data.
class PermGroup {
 public:
  /// Trivial group of degree 1.
  PermGroup();

  /// Breadth-first closure of the generators. Throws BoundExceeded when the
  /// group outgrows bounds().max_elements.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators);

  /// Wraps an element list known to be closed (e.g. the members of a
  /// subgroup). A small generating set is chosen greedily.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const std::vector<Perm>& generators() const noexcept;
  std::span<const Perm> elements() const noexcept;
  const Perm& element(ElementIndex i) const;

  std::optional<ElementIndex> find(const Perm& p) const;
  /// Throws NotSubgroup if p is not an element.
  ElementIndex index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p).has_value(); }

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const;
  ElementIndex conjugate(ElementIndex x, ElementIndex by) const;  // by x by^{-1}
  ElementIndex power(ElementIndex a, long long e) const;
  std::size_t element_order(ElementIndex a) const;
  static constexpr ElementIndex identity() { return 0; }

  std::vector<ElementIndex> generator_indices() const;
  bool is_abelian() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Data;
  explicit PermGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static PermGroup build(std::size_t degree, std::vector<Perm> generators,
                         std::vector<Perm> sorted_elements);

  std::shared_ptr<const Data> data_;
};

/// A subgroup, stored as the sorted indices of its members in the parent.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup generated_by(const PermGroup& parent, std::span<const Perm> gens);
  static Subgroup generated_by_indices(const PermGroup& parent, std::span<const ElementIndex> gens);
  /// Trusted constructor: `members` must be a sorted, closed index set.
  static Subgroup from_members(const PermGroup& parent, std::vector<ElementIndex> members);
  static Subgroup whole(const PermGroup& parent);
  static Subgroup trivial(const PermGroup& parent);

  const PermGroup& parent() const noexcept { return parent_; }
  std::span<const ElementIndex> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const { return parent_.order() / members_.size(); }

  bool contains(ElementIndex i) const;
  bool contains(const Perm& p) const;
  bool contains(const Subgroup& other) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }
  bool is_normal() const;

  std::vector<Perm> elements() const;
  /// Small generating set, as parent indices.
  std::vector<ElementIndex> generators() const;
  /// The subgroup as a group in its own right (same degree).
  PermGroup as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }
  /// Canonical order: by order, then lexicographically by member indices.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(PermGroup parent, std::vector<ElementIndex> members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  PermGroup parent_;
  std::vector<ElementIndex> members_;
};

struct ConjClass {
  PermGroup parent;
  Perm representative;  // lexicographically smallest member
  std::vector<ElementIndex> members;
  std::size_t element_order = 1;
  std::string name;  // "1A", "2A", "5B", ...

  std::size_t size() const noexcept { return members.size(); }
  bool contains(ElementIndex i) const;
};

/// Classes sorted by (element order, class size, representative) and named
/// by order plus a letter in that sequence.
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);
/// Position of the class containing element i.
std::size_t class_index_of(const std::vector<ConjClass>& classes, ElementIndex i);

Subgroup normalizer(const PermGroup& g, const Subgroup& h);
Subgroup centralizer(const PermGroup& g, std::span<const Perm> s);
Subgroup center(const PermGroup& g);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by a and b.
Subgroup join(const Subgroup& a, const Subgroup& b);
/// The set {xy : x in a, y in b}, sorted.
std::vector<ElementIndex> product_set(const Subgroup& a, const Subgroup& b);
/// Largest normal subgroup of the parent contained in h.
Subgroup core(const Subgroup& h);
Subgroup normal_closure(const PermGroup& g, std::span<const ElementIndex> s);

std::vector<std::vector<Point>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);
Subgroup point_stabilizer(const PermGroup& g, Point p);

std::size_t exponent(const PermGroup& g);
bool is_simple(const PermGroup& g);

/// Left cosets xH, each sorted, ordered by smallest member.
std::vector<std::vector<ElementIndex>> left_cosets(const Subgroup& h);

/// Left-translation action of the parent on the left cosets of h.
struct CosetAction {
  std::vector<std::vector<ElementIndex>> cosets;
  std::vector<std::size_t> coset_of;  // element index -> coset number
  std::vector<Perm> action;           // element index -> permutation of cosets
  PermGroup image;
};
CosetAction coset_action(const Subgroup& h);

/// Faithful permutation model of parent / n (action on the cosets of n).
PermGroup quotient(const Subgroup& n);

/// Left-regular representation: g acts on its own elements by x -> g x.
struct RegularRepresentation {
  PermGroup image;               // degree |G|
  std::vector<Perm> embedding;  // element index of G -> permutation
};
RegularRepresentation regular_representation(const PermGroup& g);

/// Direct product acting on the disjoint union of the factors' domains.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

}  // namespace pregal
