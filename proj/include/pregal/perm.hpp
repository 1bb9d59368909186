#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pregal {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Products compose right to left:
/// (p * q)(i) == p(q(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from disjoint or overlapping cycles, applied right
  /// to left like a product of cycles.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm& operator*=(const Perm& rhs) { return *this = *this * rhs; }
  Perm inverse() const;
  Perm pow(long long e) const;
  /// g * this * g^{-1}
  Perm conjugated_by(const Perm& g) const;

  bool is_identity() const noexcept;
  std::size_t order() const;
  std::vector<std::vector<Point>> cycles() const;  // non-trivial cycles only
  std::vector<std::size_t> cycle_type() const;    // sorted, fixed points included

  /// Embeds into a larger degree, shifting points by `offset`.
  Perm extended(std::size_t new_degree, std::size_t offset = 0) const;

  std::string to_string() const;  // 0-based cycle notation, "()" for identity

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace pregal
