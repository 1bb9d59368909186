#include "pregal/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "pregal/bounds.hpp"
#include "pregal/error.hpp"

namespace pregal {

namespace {

struct MemberHash {
  std::size_t operator()(const std::vector<ElementIndex>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (ElementIndex x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Node {
  std::vector<ElementIndex> members;  // sorted
  std::vector<ElementIndex> gens;
};

// Closure of the subgroup `base` with `extra` adjoined. Returns nothing if the
// result grows beyond `limit` elements.
std::optional<Node> extend(const PermGroup& g, const Node& base, ElementIndex extra,
                           std::size_t limit, std::vector<char>& scratch) {
  Node out;
  out.gens = base.gens;
  out.gens.push_back(extra);
  std::vector<ElementIndex> list(base.members);
  for (ElementIndex x : list) scratch[x] = 1;
  bool overflow = false;
  for (std::size_t head = 0; head < list.size() && !overflow; ++head) {
    for (ElementIndex s : out.gens) {
      ElementIndex y = g.multiply(list[head], s);
      if (!scratch[y]) {
        scratch[y] = 1;
        list.push_back(y);
        if (list.size() > limit) {
          overflow = true;
          break;
        }
      }
    }
  }
  for (ElementIndex x : list) scratch[x] = 0;
  if (overflow) return std::nullopt;
  std::sort(list.begin(), list.end());
  out.members = std::move(list);
  return out;
}

void check_bound(const PermGroup& g) {
  if (g.order() > bounds().max_subgroup_order)
    fail(ErrorKind::BoundExceeded, "subgroup enumeration needs |G| <= " +
                                       std::to_string(bounds().max_subgroup_order) +
                                       ", got " + std::to_string(g.order()));
}

std::vector<Subgroup> to_sorted(const PermGroup& g, std::vector<Node> nodes) {
  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (auto& n : nodes) out.push_back(Subgroup::from_members(g, std::move(n.members)));
  std::sort(out.begin(), out.end());
  return out;
}

// Generators of the distinct cyclic subgroups, smallest index first.
std::vector<Node> cyclic_subgroups(const PermGroup& g) {
  std::vector<Node> out;
  std::unordered_set<std::vector<ElementIndex>, MemberHash> seen;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    std::vector<ElementIndex> powers{0};
    for (ElementIndex y = x; y != 0; y = g.multiply(y, x)) powers.push_back(y);
    std::sort(powers.begin(), powers.end());
    if (seen.insert(powers).second) out.push_back(Node{std::move(powers), x == 0 ? std::vector<ElementIndex>{} : std::vector<ElementIndex>{x}});
  }
  return out;
}

}  // namespace

std::vector<Subgroup> subgroups_where(const PermGroup& g, std::size_t order_divides,
                                      const std::function<bool(const Subgroup&)>& keep) {
  check_bound(g);
  auto accept = [&](const std::vector<ElementIndex>& members) {
    if (order_divides % members.size() != 0) return false;
    return keep(Subgroup::from_members(g, members));
  };

  const std::vector<Node> cyclic = cyclic_subgroups(g);
  std::vector<ElementIndex> cyclic_gens;
  for (const Node& c : cyclic)
    if (!c.gens.empty()) cyclic_gens.push_back(c.gens.front());

  std::unordered_set<std::vector<ElementIndex>, MemberHash> seen;
  std::vector<Node> found;
  for (const Node& c : cyclic)
    if (accept(c.members) && seen.insert(c.members).second) found.push_back(c);

  std::vector<char> scratch(g.order(), 0);
  // <H, h1 c^k h2> = <H, c> for h1, h2 in H and k prime to |c|, so once <H, c>
  // is known the whole double cosets H c^k H can be skipped.
  std::vector<char> covered(g.order(), 0);
  std::vector<ElementIndex> touched;
  auto cover = [&](const Node& h, ElementIndex c) {
    std::size_t ord = 1;
    for (ElementIndex y = c; y != 0; y = g.multiply(y, c)) ++ord;
    ElementIndex ck = c;
    for (std::size_t k = 1; k < ord; ++k, ck = g.multiply(ck, c)) {
      if (std::gcd(k, ord) != 1 || covered[ck]) continue;
      std::size_t from = touched.size();
      covered[ck] = 1;
      touched.push_back(ck);
      for (std::size_t i = from; i < touched.size(); ++i)
        for (ElementIndex s : h.gens)
          for (ElementIndex y : {g.multiply(s, touched[i]), g.multiply(touched[i], s)})
            if (!covered[y]) covered[y] = 1, touched.push_back(y);
    }
  };
  for (std::size_t head = 0; head < found.size(); ++head) {
    touched.assign(found[head].members.begin(), found[head].members.end());
    for (ElementIndex x : touched) covered[x] = 1;
    for (ElementIndex c : cyclic_gens) {
      if (covered[c]) continue;
      cover(found[head], c);
      auto next = extend(g, found[head], c, order_divides, scratch);
      if (!next || !seen.insert(next->members).second) continue;
      if (accept(next->members)) found.push_back(std::move(*next));
    }
    for (ElementIndex x : touched) covered[x] = 0;
  }
  return to_sorted(g, std::move(found));
}

std::vector<Subgroup> all_subgroups(const PermGroup& g, std::optional<std::size_t> order_filter) {
  check_bound(g);
  if (order_filter) {
    if (*order_filter == 0 || g.order() % *order_filter != 0) return {};
    auto all = subgroups_where(g, *order_filter, [](const Subgroup&) { return true; });
    std::erase_if(all, [&](const Subgroup& s) { return s.order() != *order_filter; });
    return all;
  }
  return subgroups_where(g, g.order(), [](const Subgroup&) { return true; });
}

std::vector<Subgroup> normal_subgroups(const PermGroup& g) {
  std::vector<Subgroup> closures;
  for (const ConjClass& c : conjugacy_classes(g)) {
    if (c.members.front() == 0) continue;
    ElementIndex rep = c.members.front();
    closures.push_back(normal_closure(g, std::span<const ElementIndex>(&rep, 1)));
  }
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  std::set<std::vector<ElementIndex>> seen{{0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const Subgroup& c : closures) {
      if (found[head].contains(c)) continue;
      Subgroup j = join(found[head], c);
      std::vector<ElementIndex> key(j.members().begin(), j.members().end());
      if (seen.insert(std::move(key)).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Subgroup> overgroups(const Subgroup& h) {
  const PermGroup& g = h.parent();
  Node start{std::vector<ElementIndex>(h.members().begin(), h.members().end()), h.generators()};
  std::unordered_set<std::vector<ElementIndex>, MemberHash> seen{start.members};
  std::vector<Node> found{start};
  std::vector<char> scratch(g.order(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (ElementIndex x = 1; x < g.order(); ++x) {
      const Node& base = found[head];
      if (std::binary_search(base.members.begin(), base.members.end(), x)) continue;
      auto next = extend(g, base, x, g.order(), scratch);
      if (next && seen.insert(next->members).second) found.push_back(std::move(*next));
    }
  }
  return to_sorted(g, std::move(found));
}

bool product_is_subgroup(const Subgroup& a, const Subgroup& b) {
  const PermGroup& g = a.parent();
  auto set = product_set(a, b);
  std::vector<char> in(g.order(), 0);
  for (ElementIndex x : set) in[x] = 1;
  for (ElementIndex x : set)
    for (ElementIndex y : set)
      if (!in[g.multiply(x, y)]) return false;
  return in[0] != 0;
}

}  // namespace pregal
