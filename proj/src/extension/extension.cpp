#include "pregal/extension.hpp"

#include <algorithm>

#include "pregal/automorphisms.hpp"
#include "pregal/catalog.hpp"
#include "pregal/error.hpp"
#include "pregal/subgroups.hpp"

namespace pregal {

namespace {

void require_in(const PermGroup& gamma, const Subgroup& h, const char* what) {
  if (!(h.parent() == gamma))
    fail(ErrorKind::NotSubgroup, std::string(what) + " is not a subgroup of gamma");
}

bool meets_trivially(const Subgroup& a, const Subgroup& b) {
  const auto& small = a.order() <= b.order() ? a : b;
  const auto& big = a.order() <= b.order() ? b : a;
  for (ElementIndex x : small.members())
    if (x != 0 && big.contains(x)) return false;
  return true;
}

// Groups by isomorphism type. Input is canonically sorted, so the first
// member seen of each class is its canonical smallest representative.
std::vector<GroupClass> classify(const std::vector<Subgroup>& subs) {
  std::vector<GroupClass> out;
  std::vector<PermGroup> reps;
  for (const Subgroup& s : subs) {
    PermGroup as = s.as_group();
    bool placed = false;
    for (std::size_t i = 0; i < out.size() && !placed; ++i) {
      if (is_isomorphic(reps[i], as)) {
        ++out[i].count;
        placed = true;
      }
    }
    if (!placed) {
      out.push_back(GroupClass{identify(as), s, 1});
      reps.push_back(std::move(as));
    }
  }
  return out;
}

}  // namespace

ExtensionModel::ExtensionModel(PermGroup gamma, Subgroup gamma_e)
    : gamma_(std::move(gamma)), gamma_e_(std::move(gamma_e)) {
  require_in(gamma_, gamma_e_, "gamma_e");
  if (!core(gamma_e_).is_trivial())
    fail(ErrorKind::NotCoreFree,
         "gamma_e contains a normal subgroup of gamma of order " +
             std::to_string(core(gamma_e_).order()));
}

ExtensionModel ExtensionModel::from_quotient(const PermGroup& gamma, const Subgroup& gamma_e) {
  require_in(gamma, gamma_e, "gamma_e");
  CosetAction act = coset_action(gamma_e);
  // coset 0 holds the identity, i.e. it is gamma_e itself
  return ExtensionModel(act.image, point_stabilizer(act.image, 0));
}

ExtensionModel ExtensionModel::from_stabilizer(const PermGroup& gamma, Point point) {
  if (point >= gamma.degree()) fail(ErrorKind::DegreeMismatch, "stabilized point out of range");
  if (!is_transitive(gamma)) fail(ErrorKind::InvalidInput, "gamma is not transitive");
  return ExtensionModel(gamma, point_stabilizer(gamma, point));
}

bool is_complement(const PermGroup& gamma, const Subgroup& u, const Subgroup& v) {
  require_in(gamma, u, "u");
  require_in(gamma, v, "v");
  return u.order() * v.order() == gamma.order() && meets_trivially(u, v);
}

std::vector<Subgroup> complements(const PermGroup& gamma, const Subgroup& u) {
  require_in(gamma, u, "u");
  const std::size_t d = gamma.order() / u.order();
  auto found = subgroups_where(gamma, d, [&](const Subgroup& v) { return meets_trivially(u, v); });
  std::erase_if(found, [&](const Subgroup& v) { return v.order() != d; });
  return found;
}

// Normal subgroups are few, so this avoids the full complement search.
std::vector<Subgroup> normal_complements(const PermGroup& gamma, const Subgroup& u) {
  require_in(gamma, u, "u");
  std::vector<Subgroup> out;
  for (Subgroup& v : normal_subgroups(gamma))
    if (v.order() * u.order() == gamma.order() && meets_trivially(u, v)) out.push_back(std::move(v));
  return out;
}

PreGaloisReport analyze(const ExtensionModel& model) {
  PreGaloisReport r;
  r.complements = complements(model.gamma(), model.gamma_e());
  for (const auto& v : r.complements)
    if (v.is_normal()) r.normal_complements.push_back(v);
  r.potential_groups = classify(r.complements);
  r.pre_galois_groups = classify(r.normal_complements);
  r.is_potentially_galois = !r.complements.empty();
  r.is_pre_galois = !r.normal_complements.empty();
  return r;
}

std::vector<MinimalField> minimal_fields(const ExtensionModel& model) {
  std::vector<MinimalField> out;
  for (const Subgroup& g : complements(model.gamma(), model.gamma_e())) {
    MinimalField f;
    f.field_degree = model.gamma().order() / g.order();
    // L = Ê^G is modeled by the coset space Γ/G; Gal(Ê/L) is recovered as
    // the stabilizer of the trivial coset.
    CosetAction act = coset_action(g);
    std::vector<ElementIndex> stab;
    for (ElementIndex x = 0; x < model.gamma().order(); ++x)
      if (act.coset_of[x] == act.coset_of[0]) stab.push_back(x);
    f.roundtrip = std::equal(stab.begin(), stab.end(), g.members().begin(), g.members().end()) &&
                  is_complement(model.gamma(), model.gamma_e(), g);
    f.galois_over_k = g.is_normal();
    f.complement = g;
    out.push_back(std::move(f));
  }
  return out;
}

Subgroup composite_minimalization(const PermGroup& delta, const Subgroup& a, const Subgroup& b) {
  require_in(delta, a, "a");
  require_in(delta, b, "b");
  if (!b.is_normal()) fail(ErrorKind::NotNormal, "Gal(ÊL/Ê) must be normal in Gal(ÊL/k)");
  return join(a, b);
}

bool is_complete_group(const PermGroup& g) {
  return center(g).is_trivial() && outer_order(g) == 1;
}

AntiIsomorphismTranscript anti_isomorphism(const PermGroup& gamma, const Subgroup& u,
                                           const Subgroup& g, const Subgroup& g2) {
  for (const Subgroup* s : {&g, &g2}) {
    require_in(gamma, *s, "complement");
    if (!s->is_normal() || !is_complement(gamma, u, *s))
      fail(ErrorKind::NotNormalComplement, "argument is not a normal complement of u");
  }
  AntiIsomorphismTranscript t;
  t.intersection = intersection(g, g2);

  std::vector<ElementIndex> phi(gamma.order(), 0);
  t.gamma_unique = true;
  for (ElementIndex x : g.members()) {
    std::size_t hits = 0;
    for (ElementIndex c : u.members()) {
      ElementIndex y = gamma.multiply(x, c);
      if (g2.contains(y)) {
        if (hits++ == 0) phi[x] = y;
      }
    }
    t.gamma_unique = t.gamma_unique && hits == 1;
    t.phi.emplace_back(x, phi[x]);
  }

  std::vector<ElementIndex> image;
  for (auto& [x, y] : t.phi) image.push_back(y);
  std::sort(image.begin(), image.end());
  t.bijective = t.gamma_unique &&
                std::equal(image.begin(), image.end(), g2.members().begin(), g2.members().end());

  t.cocycle = true;
  for (ElementIndex x : g.members())
    for (ElementIndex y : g.members())
      t.cocycle = t.cocycle &&
                  phi[gamma.multiply(x, y)] == gamma.multiply(gamma.conjugate(phi[y], x), phi[x]);

  t.identity_on_intersection = true;
  for (ElementIndex x : t.intersection.members())
    t.identity_on_intersection = t.identity_on_intersection && phi[x] == x;

  // Induced map on quotients by K = G ∩ G': well defined, bijective, and
  // order-reversing. Cosets are compared as sets of gamma indices.
  const Subgroup& k = t.intersection;
  auto coset = [&](ElementIndex x) {
    std::vector<ElementIndex> c;
    for (ElementIndex m : k.members()) c.push_back(gamma.multiply(x, m));
    std::sort(c.begin(), c.end());
    return c;
  };
  bool ok = t.bijective;
  for (ElementIndex x : g.members())
    for (ElementIndex m : k.members())
      ok = ok && coset(phi[gamma.multiply(x, m)]) == coset(phi[x]);
  for (ElementIndex x : g.members())
    for (ElementIndex y : g.members())
      ok = ok && coset(phi[gamma.multiply(x, y)]) == coset(gamma.multiply(phi[y], phi[x]));
  t.induced_anti_isomorphism = ok;

  bool iso = t.bijective;
  for (ElementIndex x : g.members())
    for (ElementIndex y : g.members())
      iso = iso && gamma.inverse(phi[gamma.multiply(x, y)]) ==
                       gamma.multiply(gamma.inverse(phi[x]), gamma.inverse(phi[y]));
  t.inverse_is_isomorphism = iso;
  return t;
}

bool faithful_action_check(const ExtensionModel& model, const Subgroup& g) {
  require_in(model.gamma(), g, "g");
  if (!g.is_normal() || !is_complement(model.gamma(), model.gamma_e(), g))
    fail(ErrorKind::NotNormalComplement, "g is not a normal complement of gamma_e");
  auto gens = g.elements();
  return intersection(model.gamma_e(), centralizer(model.gamma(), gens)).is_trivial();
}

}  // namespace pregal
