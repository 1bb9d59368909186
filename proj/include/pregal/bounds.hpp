#pragma once

#include <cstddef>
#include <cstdint>

namespace pregal {

/// Size limits shared by all enumeration routines.
struct Bounds {
  std::size_t max_elements = 10'000;          // closure materialization
  std::size_t max_subgroup_order = 2'000;     // all_subgroups / complements
  std::size_t max_automorphism_order = 720;   // Aut, isomorphism search
  std::size_t max_regular_degree = 8;         // hopf_regular_subgroups
  std::size_t max_symmetric_degree = 8;       // brute force over S_d
  std::uint64_t max_tuple_space = 10'000'000; // rigidity tuple search
};

/// Process-wide bounds. Initialized from the defaults above, with
/// PREGAL_MAX_ELEMENTS overriding max_elements when set.
const Bounds& bounds();

/// Replaces the process-wide bounds. Intended for program start-up and tests.
void set_bounds(const Bounds& b);

}  // namespace pregal
