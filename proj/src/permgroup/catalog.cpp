#include "pregal/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

#include "pregal/automorphisms.hpp"
#include "pregal/error.hpp"

namespace pregal {

namespace {

Perm cycle(std::size_t degree, std::vector<Point> points) {
  return Perm::from_cycles(degree, {std::move(points)});
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || n == 0)
    fail(ErrorKind::InvalidInput, "unknown catalog group '" + std::string(whole) + "'");
  return n;
}

PermGroup regular_model(const PermGroup& g) { return regular_representation(g).image; }

}  // namespace

PermGroup cyclic_group(std::size_t n) {
  if (n == 1) return PermGroup();
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
  return PermGroup::closure(n, {cycle(n, pts)});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) fail(ErrorKind::InvalidInput, "dihedral group needs n >= 3");
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup::closure(n, {cycle(n, pts), Perm(refl)});
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 1) return PermGroup();
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
  if (n == 2) return PermGroup::closure(2, {cycle(2, {0, 1})});
  return PermGroup::closure(n, {cycle(n, pts), cycle(n, {0, 1})});
}

PermGroup alternating_group(std::size_t n) {
  if (n <= 2) return PermGroup::closure(std::max<std::size_t>(n, 1), {});
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(cycle(n, {0, 1, i}));
  return PermGroup::closure(n, std::move(gens));
}

PermGroup klein_four_group() {
  return PermGroup::closure(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup quaternion_group() {
  // i = (1 2 4 7)(3 6 8 5), j = (1 3 4 8)(2 5 7 6) in 1-based points
  return PermGroup::closure(8, {Perm::from_cycles(8, {{0, 1, 3, 6}, {2, 5, 7, 4}}),
                                Perm::from_cycles(8, {{0, 2, 3, 7}, {1, 4, 6, 5}})});
}

PermGroup frobenius_twenty() {
  return PermGroup::closure(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {1, 2, 4, 3})});
}

PermGroup catalog_group(std::string_view name) {
  if (name.empty()) fail(ErrorKind::InvalidInput, "empty catalog group name");
  if (name.starts_with("reg:")) return regular_model(catalog_group(name.substr(4)));
  if (auto x = name.find('x'); x != std::string_view::npos)
    return direct_product(catalog_group(name.substr(0, x)), catalog_group(name.substr(x + 1)));
  if (auto caret = name.find('^'); caret != std::string_view::npos) {
    std::size_t k = parse_count(name.substr(caret + 1), name);
    PermGroup base = catalog_group(name.substr(0, caret));
    PermGroup out = base;
    for (std::size_t i = 1; i < k; ++i) out = direct_product(out, base);
    return out;
  }
  if (name == "V4") return klein_four_group();
  if (name == "Q8") return quaternion_group();
  if (name == "F20") return frobenius_twenty();
  std::string_view rest = name.substr(1);
  switch (name.front()) {
    case 'C': return cyclic_group(parse_count(rest, name));
    case 'S': return symmetric_group(parse_count(rest, name));
    case 'A': return alternating_group(parse_count(rest, name));
    case 'D': {
      std::size_t order = parse_count(rest, name);
      if (order % 2 != 0 || order < 6)
        fail(ErrorKind::InvalidInput, "dihedral order must be even and at least 6");
      return dihedral_group(order / 2);
    }
    default: break;
  }
  fail(ErrorKind::InvalidInput, "unknown catalog group '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"C1",  "C2",   "C3",   "C4",    "C5",    "C6",    "C7",     "C8",     "V4",
          "S3",  "D8",   "Q8",   "C4xC2", "C2^3",  "D10",   "F20",    "D12",    "A4",
          "S4",  "A5",   "S5",   "A6",    "S6",    "A5xA5", "reg:C3", "reg:C4", "reg:V4",
          "reg:S3", "reg:A4"};
}

namespace {

const std::vector<std::pair<std::string, PermGroup>>& known_groups() {
  static const std::vector<std::pair<std::string, PermGroup>> groups = [] {
    std::vector<std::pair<std::string, PermGroup>> out;
    for (const char* n : {"C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C4xC2",
                          "C2^3", "D8", "Q8", "C9", "C3xC3", "C10", "D10", "C11", "C12",
                          "C6xC2", "D12", "A4", "C14", "D14", "C15", "C16", "D16", "F20",
                          "S4", "C2xA4", "C2xS4", "A5", "S5", "A6", "S6"})
      out.emplace_back(n, catalog_group(n));
    return out;
  }();
  return groups;
}

}  // namespace

std::string identify(const PermGroup& g) {
  for (const auto& [name, h] : known_groups())
    if (h.order() == g.order() && is_isomorphic(g, h)) return name;
  return "order" + std::to_string(g.order());
}

std::vector<std::pair<std::string, PermGroup>> groups_of_order(std::size_t n) {
  static const std::map<std::size_t, std::vector<std::string>> names = {
      {1, {"C1"}}, {2, {"C2"}}, {3, {"C3"}}, {4, {"C4", "V4"}}, {5, {"C5"}},
      {6, {"C6", "S3"}}, {7, {"C7"}}, {8, {"C8", "C4xC2", "C2^3", "D8", "Q8"}}};
  auto it = names.find(n);
  if (it == names.end())
    fail(ErrorKind::BoundExceeded, "group catalog covers orders 1..8 only");
  std::vector<std::pair<std::string, PermGroup>> out;
  for (const auto& name : it->second) out.emplace_back(name, regular_model(catalog_group(name)));
  return out;
}

}  // namespace pregal
