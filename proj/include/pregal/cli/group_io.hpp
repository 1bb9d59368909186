#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pregal/perm_group.hpp"

namespace pregal::cli {

// Line-oriented group files:
//
//   # comment
//   degree 4
//   gen (1 2 3 4)
//   gen (1 3)
//   subgroup refl
//   gen (2 4)
//   end
//
// Points are 1-based. "()" is the identity.
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<std::pair<std::string, std::vector<Perm>>> subgroups;
};

/// Throws ParseError (with line and column) and DegreeMismatch.
GroupSpec parse_group_spec(std::string_view text);
PermGroup parse_group(std::string_view text);

/// One permutation in 1-based disjoint cycle notation, e.g. "(1 2)(3 4)".
Perm parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Perm& p);

std::string serialize_group(const PermGroup& g,
                            const std::vector<std::pair<std::string, std::vector<Perm>>>& subgroups = {});

}  // namespace pregal::cli
