#include <algorithm>
#include <numeric>
#include <set>

#include "pregal/bounds.hpp"
#include "pregal/catalog.hpp"
#include "pregal/error.hpp"
#include "pregal/extension.hpp"

namespace pregal {

// Every regular subgroup of S_d is conjugate to the regular representation of
// some group of order d, so conjugating each catalog model by all of S_d
// reaches them all.
HopfResult hopf_regular_subgroups(const ExtensionModel& model) {
  const std::size_t d = model.degree();
  if (d > bounds().max_regular_degree)
    fail(ErrorKind::BoundExceeded, "regular-subgroup search needs degree <= " +
                                       std::to_string(bounds().max_regular_degree));
  HopfResult out;
  out.lambda = coset_action(model.gamma_e()).image;
  const auto& lam_gens = out.lambda.generators();

  std::vector<Point> w(d);
  for (const auto& [name, reg] : groups_of_order(d)) {
    std::set<std::vector<Perm>> seen;
    std::vector<HopfStructure> found;
    std::iota(w.begin(), w.end(), 0);
    do {
      Perm omega(w);
      std::vector<Perm> conj;
      for (const Perm& x : reg.elements()) conj.push_back(x.conjugated_by(omega));
      std::sort(conj.begin(), conj.end());
      if (!seen.insert(conj).second) continue;
      bool normalized = true;
      for (const Perm& l : lam_gens)
        for (const Perm& x : conj)
          normalized = normalized && std::binary_search(conj.begin(), conj.end(), x.conjugated_by(l));
      if (!normalized) continue;
      bool inside = std::all_of(conj.begin(), conj.end(),
                                [&](const Perm& x) { return out.lambda.contains(x); });
      found.push_back(HopfStructure{PermGroup::from_elements(d, std::move(conj)), name, inside});
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(found.begin(), found.end(), [](const HopfStructure& a, const HopfStructure& b) {
      return std::lexicographical_compare(a.n.elements().begin(), a.n.elements().end(),
                                          b.n.elements().begin(), b.n.elements().end());
    });
    for (auto& h : found) out.structures.push_back(std::move(h));
  }
  return out;
}

}  // namespace pregal
