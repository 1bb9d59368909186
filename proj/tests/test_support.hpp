#pragma once

// Independent brute-force helpers shared by the unit tests. None of these go
// through the library's enumeration code paths.

#include <algorithm>
#include <set>
#include <vector>

#include "pregal/perm.hpp"
#include "pregal/perm_group.hpp"

namespace pregal::testing {

using RawPerm = std::vector<Point>;

inline RawPerm raw(const Perm& p) { return RawPerm(p.images().begin(), p.images().end()); }

inline RawPerm raw_mul(const RawPerm& a, const RawPerm& b) {
  RawPerm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline RawPerm raw_inv(const RawPerm& a) {
  RawPerm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<Point>(i);
  return out;
}

/// Fixed-point closure under all pairwise products.
inline std::set<RawPerm> naive_closure(std::size_t degree, const std::vector<RawPerm>& gens) {
  RawPerm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Point>(i);
  std::set<RawPerm> s{id};
  s.insert(gens.begin(), gens.end());
  for (;;) {
    std::set<RawPerm> next = s;
    for (const auto& a : s)
      for (const auto& b : s) next.insert(raw_mul(a, b));
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

inline std::set<RawPerm> raw_elements(const PermGroup& g) {
  std::set<RawPerm> out;
  for (const Perm& p : g.elements()) out.insert(raw(p));
  return out;
}

inline std::set<RawPerm> raw_elements(const Subgroup& h) {
  std::set<RawPerm> out;
  for (const Perm& p : h.elements()) out.insert(raw(p));
  return out;
}

/// Every permutation of {0..d-1}.
inline std::vector<RawPerm> all_perms(std::size_t d) {
  RawPerm p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<Point>(i);
  std::vector<RawPerm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace pregal::testing
