#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pregal/perm_group.hpp"

namespace pregal {

/// Every subgroup of g, or every subgroup of order `order_filter`, found by
/// cyclic extension. Sorted canonically, no duplicates. Throws BoundExceeded
/// when |g| exceeds bounds().max_subgroup_order.
std::vector<Subgroup> all_subgroups(const PermGroup& g,
                                    std::optional<std::size_t> order_filter = std::nullopt);

/// Cyclic extension restricted to subgroups whose order divides
/// `order_divides` and which satisfy `keep`. `keep` must be inherited by
/// subgroups, otherwise the search is incomplete.
std::vector<Subgroup> subgroups_where(const PermGroup& g, std::size_t order_divides,
                                      const std::function<bool(const Subgroup&)>& keep);

/// Every normal subgroup, built as joins of normal closures of conjugacy
/// classes. Sorted canonically. No order bound: this is cheap.
std::vector<Subgroup> normal_subgroups(const PermGroup& g);

/// All subgroups of h.parent() that contain h.
std::vector<Subgroup> overgroups(const Subgroup& h);

/// Whether the product set a*b is a subgroup (closure test on the
/// materialized set).
bool product_is_subgroup(const Subgroup& a, const Subgroup& b);

}  // namespace pregal
