#pragma once

#include <span>
#include <vector>

#include "pregal/perm_group.hpp"

namespace pregal {

/// Homomorphism between materialized permutation groups, stored as an
/// element-index map.
class GroupHom {
 public:
  GroupHom() = default;

  /// `images[i]` is the image of source.generators()[i]. Throws
  /// NotAHomomorphism if the assignment does not extend.
  static GroupHom from_generator_images(const PermGroup& source, const PermGroup& target,
                                        std::span<const Perm> images);
  /// Target taken to be the group generated by the images.
  static GroupHom from_generator_images(const PermGroup& source, std::span<const Perm> images);
  /// Validates every product (|source|^2 checks).
  static GroupHom from_map(const PermGroup& source, const PermGroup& target, IndexMap map);
  static GroupHom identity(const PermGroup& g);
  static GroupHom trivial(const PermGroup& source, const PermGroup& target);

  const PermGroup& source() const noexcept { return source_; }
  const PermGroup& target() const noexcept { return target_; }
  const IndexMap& map() const noexcept { return map_; }

  ElementIndex operator[](ElementIndex x) const { return map_[x]; }
  const Perm& operator()(const Perm& x) const;

  Subgroup kernel() const;
  Subgroup image() const;
  bool is_surjective() const;
  bool is_injective() const;
  bool is_trivial() const;

  /// this after other
  GroupHom after(const GroupHom& other) const;

 private:
  GroupHom(PermGroup s, PermGroup t, IndexMap m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

  PermGroup source_;
  PermGroup target_;
  IndexMap map_;
};

}  // namespace pregal
