#include "pregal/symmetric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pregal/bounds.hpp"
#include "pregal/error.hpp"

namespace pregal {

PermGroup symmetric_normalizer_bruteforce(const PermGroup& g) {
  const std::size_t d = g.degree();
  if (d > bounds().max_symmetric_degree)
    fail(ErrorKind::BoundExceeded, "brute-force normalizer needs degree <= " +
                                       std::to_string(bounds().max_symmetric_degree));
  std::vector<Point> images(d);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Perm> found;
  do {
    Perm w(images);
    Perm w_inv = w.inverse();
    bool ok = true;
    for (const Perm& s : g.generators())
      if (!g.contains(w * s * w_inv)) {
        ok = false;
        break;
      }
    if (ok) found.push_back(std::move(w));
  } while (std::next_permutation(images.begin(), images.end()));
  return PermGroup::from_elements(d, std::move(found));
}

PermGroup symmetric_normalizer_via_automorphisms(const PermGroup& g) {
  if (!is_transitive(g))
    fail(ErrorKind::BoundExceeded,
         "normalizer of an intransitive group beyond the brute-force degree is not supported");
  const std::size_t d = g.degree();
  // transversal: element moving 0 to each point
  std::vector<ElementIndex> moving(d, 0);
  std::vector<bool> have(d, false);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    Point p = g.element(x)[0];
    if (!have[p]) {
      have[p] = true;
      moving[p] = x;
    }
  }
  std::map<std::vector<ElementIndex>, std::vector<Point>> stabilizer_points;
  for (Point p = 0; p < d; ++p) {
    auto s = point_stabilizer(g, p);
    stabilizer_points[std::vector<ElementIndex>(s.members().begin(), s.members().end())].push_back(p);
  }
  auto stab0 = point_stabilizer(g, 0);
  std::vector<Perm> found;
  for (const IndexMap& a : automorphism_group(g).automorphisms) {
    std::vector<ElementIndex> image;
    for (ElementIndex x : stab0.members()) image.push_back(a[x]);
    std::sort(image.begin(), image.end());
    auto it = stabilizer_points.find(image);
    if (it == stabilizer_points.end()) continue;
    for (Point p : it->second) {
      std::vector<Point> w(d);
      for (Point q = 0; q < d; ++q) w[q] = g.element(a[moving[q]])[p];
      found.emplace_back(std::move(w));
    }
  }
  return PermGroup::from_elements(d, std::move(found));
}

PermGroup symmetric_normalizer(const PermGroup& g) {
  if (g.degree() <= bounds().max_symmetric_degree) return symmetric_normalizer_bruteforce(g);
  return symmetric_normalizer_via_automorphisms(g);
}

Subgroup symmetric_centralizer(const PermGroup& normalizer, const PermGroup& g) {
  return centralizer(normalizer, g.generators());
}

IndexMap induced_automorphism(const PermGroup& g, const Perm& by) {
  Perm inv = by.inverse();
  IndexMap m(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) m[x] = g.index_of(by * g.element(x) * inv);
  return m;
}

std::vector<IndexMap> normalizer_automorphisms(const PermGroup& g) {
  PermGroup nor = symmetric_normalizer(g);
  std::set<IndexMap> distinct;
  for (const Perm& w : nor.elements()) distinct.insert(induced_automorphism(g, w));
  return {distinct.begin(), distinct.end()};
}

}  // namespace pregal
