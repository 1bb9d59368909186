#include "pregal/rigidity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pregal/automorphisms.hpp"
#include "pregal/bounds.hpp"
#include "pregal/error.hpp"
#include "pregal/extension.hpp"
#include "pregal/geometric.hpp"
#include "pregal/symmetric.hpp"

namespace pregal {

namespace {

// Class index (into conjugacy_classes(g)) of every element.
struct ClassTable {
  std::vector<ConjClass> classes;
  std::vector<std::size_t> of;

  explicit ClassTable(const PermGroup& g) : classes(conjugacy_classes(g)), of(g.order(), 0) {
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (ElementIndex x : classes[c].members) of[x] = c;
  }
  std::size_t index(const PermGroup& g, const ConjClass& c) const { return of[g.index_of(c.representative)]; }
  std::vector<std::size_t> indices(const ClassTuple& ct) const {
    std::vector<std::size_t> out;
    for (const ConjClass& c : ct.classes) out.push_back(index(ct.group, c));
    return out;
  }
};

long long reduce(long long m, std::size_t e) {
  const long long n = static_cast<long long>(e);
  return ((m % n) + n) % n;
}

void require_unit(long long m, std::size_t e) {
  if (std::gcd(reduce(m, e), static_cast<long long>(e)) != 1 && e != 1)
    fail(ErrorKind::BadExponent, "exponent " + std::to_string(m) + " is not coprime to exp(G) = " + std::to_string(e));
}

// ω(C_i) as class indices
std::vector<std::size_t> apply(const ClassTable& t, const PermGroup& g, const IndexMap& a,
                               const std::vector<std::size_t>& cls) {
  std::vector<std::size_t> out;
  for (std::size_t c : cls) out.push_back(t.of[a[g.index_of(t.classes[c].representative)]]);
  return out;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<std::size_t>> orbits_under(const std::vector<ClassVector>& tuples,
                                                   const std::vector<IndexMap>& autos) {
  std::map<ClassVector, std::size_t> where;
  for (std::size_t i = 0; i < tuples.size(); ++i) where.emplace(tuples[i], i);
  std::vector<char> seen(tuples.size(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit{i};
    seen[i] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const IndexMap& a : autos) {
        ClassVector img;
        for (ElementIndex x : tuples[orbit[k]]) img.push_back(a[x]);
        auto it = where.find(img);  // automorphisms moving a class leave the set
        if (it != where.end() && !seen[it->second]) {
          seen[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

void ClassTuple::validate() const {
  for (const ConjClass& c : classes) {
    if (c.members.empty()) fail(ErrorKind::InvalidInput, "empty conjugacy class");
    if (!(c.parent == group)) fail(ErrorKind::InvalidInput, "class " + c.name + " belongs to another group");
  }
}

std::vector<std::string> ClassTuple::names() const {
  std::vector<std::string> out;
  for (const ConjClass& c : classes) out.push_back(c.name);
  return out;
}

ClassTuple class_tuple(const PermGroup& g, const std::vector<std::string>& names) {
  ClassTuple ct{g, {}};
  auto all = conjugacy_classes(g);
  for (const std::string& n : names) {
    auto it = std::find_if(all.begin(), all.end(), [&](const ConjClass& c) { return c.name == n; });
    if (it == all.end()) fail(ErrorKind::InvalidInput, "no conjugacy class named " + n);
    ct.classes.push_back(*it);
  }
  return ct;
}

std::vector<ClassVector> tuple_solutions(const ClassTuple& ct) {
  ct.validate();
  const PermGroup& g = ct.group;
  const std::size_t r = ct.classes.size();
  if (r == 0) return {};
  std::uint64_t space = 1;
  for (const ConjClass& c : ct.classes) {
    space *= c.size();
    if (space > bounds().max_tuple_space)
      fail(ErrorKind::BoundExceeded, "tuple search space exceeds " + std::to_string(bounds().max_tuple_space));
  }

  std::vector<ClassVector> out;
  ClassVector cur(r);
  // the last entry is forced: g_r = (g_1 ... g_{r-1})^{-1}
  auto rec = [&](auto&& self, std::size_t i, ElementIndex prod) -> void {
    if (i + 1 == r) {
      ElementIndex last = g.inverse(prod);
      if (!ct.classes[i].contains(last)) return;
      cur[i] = last;
      if (Subgroup::generated_by_indices(g, cur).order() == g.order()) out.push_back(cur);
      return;
    }
    for (ElementIndex x : ct.classes[i].members) {
      cur[i] = x;
      self(self, i + 1, g.multiply(prod, x));
    }
  };
  rec(rec, 0, PermGroup::identity());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexMap> embedding_automorphisms(const PermGroup& g, Embedding e) {
  if (e == Embedding::Regular) return automorphism_group(g).automorphisms;
  return normalizer_automorphisms(g);
}

RigidityReport is_weakly_rigid(const ClassTuple& ct, Embedding e) {
  RigidityReport r;
  r.tuples = tuple_solutions(ct);
  if (r.tuples.empty()) fail(ErrorKind::EmptyTupleSet, "no generating tuples with product one in the given classes");
  const PermGroup& g = ct.group;
  std::vector<IndexMap> inner;
  for (ElementIndex x = 0; x < g.order(); ++x) inner.push_back(inner_automorphism(g, x));
  r.orbits = orbits_under(r.tuples, embedding_automorphisms(g, e));
  r.inner_orbits = orbits_under(r.tuples, inner);
  r.is_weakly_rigid = r.orbits.size() == 1;
  r.is_rigid = r.inner_orbits.size() == 1;
  return r;
}

std::vector<std::size_t> class_power_map(const PermGroup& g, long long m) {
  ClassTable t(g);
  std::vector<std::size_t> out;
  for (const ConjClass& c : t.classes) out.push_back(t.of[g.power(g.index_of(c.representative), m)]);
  return out;
}

std::vector<long long> unit_exponents(const PermGroup& g) {
  const long long e = static_cast<long long>(exponent(g));
  std::vector<long long> out;
  for (long long m = 1; m < std::max(e, 2LL); ++m)
    if (std::gcd(m, e) == 1) out.push_back(m);
  return out;
}

long long lift_unit_exponent(const PermGroup& g, long long residue, std::size_t d) {
  if (d == 0) fail(ErrorKind::BadExponent, "modulus must be positive");
  const long long dd = static_cast<long long>(d);
  const long long e = static_cast<long long>(exponent(g));
  const long long res = reduce(residue, d);
  if (std::gcd(res, dd) != 1 && d != 1)
    fail(ErrorKind::BadExponent, std::to_string(residue) + " is not a unit mod " + std::to_string(d));
  const long long period = std::lcm(dd, e);
  std::optional<long long> best;
  std::vector<std::size_t> powers;
  for (long long m = res == 0 ? dd : res; m <= period; m += dd) {
    if (std::gcd(m, e) != 1) continue;
    auto p = class_power_map(g, m);
    if (!best) {
      best = m;
      powers = std::move(p);
    } else if (p != powers) {
      fail(ErrorKind::BadExponent, "residue " + std::to_string(residue) + " mod " + std::to_string(d) +
                                       " does not determine class powering");
    }
  }
  if (!best) fail(ErrorKind::BadExponent, "no lift of " + std::to_string(residue) + " coprime to exp(G)");
  return *best;
}

RationalityReport is_weakly_rational(const ClassTuple& ct, Embedding e, const std::vector<long long>& exponents) {
  ct.validate();
  const PermGroup& g = ct.group;
  const std::size_t ex = exponent(g);
  for (long long m : exponents) require_unit(m, ex);
  ClassTable t(g);
  const auto cls = t.indices(ct);
  const auto target = sorted(cls);
  const auto autos = embedding_automorphisms(g, e);

  RationalityReport r;
  r.weakly_rational = r.rational = true;
  for (long long m : exponents) {
    auto pm = class_power_map(g, m);
    std::vector<std::size_t> powered;
    for (std::size_t c : cls) powered.push_back(pm[c]);
    powered = sorted(powered);
    ExponentWitness w;
    w.m = m;
    for (const IndexMap& a : autos) {  // identity first
      if (sorted(apply(t, g, a, powered)) != target) continue;
      w.weak = true;
      w.plain = a == autos.front();
      w.automorphism = a;
      break;
    }
    r.weakly_rational = r.weakly_rational && w.weak;
    r.rational = r.rational && w.plain;
    r.exponents.push_back(std::move(w));
  }
  return r;
}

void GaloisActionData::validate(std::size_t r, std::size_t group_exponent) const {
  std::set<std::pair<std::vector<std::size_t>, long long>> set;
  for (const Record& rec : records) {
    std::vector<std::size_t> s = rec.branch_perm;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s.size() != r || s[i] != i) fail(ErrorKind::InvalidInput, "branch_perm is not a permutation of the slots");
    require_unit(rec.chi, group_exponent);
    set.emplace(rec.branch_perm, reduce(rec.chi, group_exponent));
  }
  for (const Record& a : records)
    for (const Record& b : records) {
      std::vector<std::size_t> c(r);
      for (std::size_t i = 0; i < r; ++i) c[i] = b.branch_perm[a.branch_perm[i]];
      if (!set.count({c, reduce(a.chi * b.chi, group_exponent)}))
        fail(ErrorKind::InvalidInput, "Galois action records are not closed under composition");
    }
}

KRationalReport is_weakly_k_rational_triple(const ClassTuple& ct, Embedding e, const GaloisActionData& action) {
  ct.validate();
  const PermGroup& g = ct.group;
  const std::size_t r = ct.classes.size();
  action.validate(r, exponent(g));
  ClassTable t(g);
  const auto cls = t.indices(ct);
  const auto autos = embedding_automorphisms(g, e);

  KRationalReport k;
  k.weakly_k_rational = k.k_rational = true;
  for (const auto& rec : action.records) {
    auto pm = class_power_map(g, rec.chi);
    std::vector<std::size_t> need(r);  // C_{τ(i)}^χ
    for (std::size_t i = 0; i < r; ++i) need[i] = pm[cls[rec.branch_perm[i]]];
    std::optional<IndexMap> w;
    for (const IndexMap& a : autos)
      if (apply(t, g, a, cls) == need) {
        w = a;
        break;
      }
    k.weakly_k_rational = k.weakly_k_rational && w.has_value();
    k.k_rational = k.k_rational && w && *w == autos.front();
    k.witnesses.push_back(std::move(w));
  }
  return k;
}

GaloisActionData construct_branch_assignment(const ClassTuple& ct, Embedding e,
                                             const std::vector<long long>& exponents) {
  ct.validate();
  const PermGroup& g = ct.group;
  const std::size_t r = ct.classes.size();
  const std::size_t ex = exponent(g);
  for (long long m : exponents) require_unit(m, ex);
  ClassTable t(g);
  const auto cls = t.indices(ct);
  const auto autos = embedding_automorphisms(g, e);

  std::vector<GaloisActionData::Record> seeds;
  for (long long m : exponents) {
    auto pm = class_power_map(g, m);
    std::vector<std::size_t> powered;
    for (std::size_t c : cls) powered.push_back(pm[c]);
    const auto want = sorted(powered);
    // ω = 1 when it works, otherwise the ω fixing the most slots
    const IndexMap* best = nullptr;
    std::size_t best_fixed = 0;
    for (const IndexMap& a : autos) {
      auto img = apply(t, g, a, cls);
      if (sorted(img) != want) continue;
      std::size_t fixed = 0;
      for (std::size_t i = 0; i < r; ++i) fixed += img[i] == powered[i];
      if (!best || fixed > best_fixed) {
        best = &a;
        best_fixed = fixed;
      }
      if (best == &autos.front()) break;
    }
    if (!best)
      fail(ErrorKind::NotWeaklyRational,
           "classes are not stable under exponent " + std::to_string(m) + " up to the normalizer");
    auto img = apply(t, g, *best, cls);
    std::vector<std::size_t> tau(r, r);
    std::vector<char> used(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      if (img[i] == powered[i]) tau[i] = i, used[i] = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (tau[i] != r) continue;
      for (std::size_t j = 0; j < r; ++j)
        if (!used[j] && powered[j] == img[i]) {
          tau[i] = j;
          used[j] = 1;
          break;
        }
    }
    seeds.push_back({std::move(tau), reduce(m, ex) == 0 ? 1 : reduce(m, ex)});
  }

  // close under composition; the identity record appears as a power of any seed
  std::set<GaloisActionData::Record> all(seeds.begin(), seeds.end());
  std::vector<GaloisActionData::Record> queue(all.begin(), all.end());
  if (queue.empty()) {
    std::vector<std::size_t> id(r);
    std::iota(id.begin(), id.end(), std::size_t{0});
    all.insert({id, 1});
  }
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : seeds) {
      GaloisActionData::Record c;
      c.branch_perm.resize(r);
      for (std::size_t i = 0; i < r; ++i) c.branch_perm[i] = s.branch_perm[queue[k].branch_perm[i]];
      c.chi = reduce(queue[k].chi * s.chi, ex);
      if (c.chi == 0) c.chi = 1;  // exp(G) = 1
      if (all.insert(c).second) queue.push_back(c);
    }
  GaloisActionData d;
  d.records.assign(all.begin(), all.end());
  return d;
}

namespace {

RigidityCertificate finish(const ClassTuple& ct, Embedding e, RigidityCertificate c, bool split_hypothesis) {
  const PermGroup& g = ct.group;
  auto aut = automorphism_group(g);
  c.aut_bound = aut.order();
  c.out_bound = aut.outer_order();
  // regular embedding: Nor = Hol(G), Cen = right translations, so Nor/(G·Cen) = Out(G)
  c.nor_bound = e == Embedding::Regular ? c.out_bound : nor_gcen_out(g).quotient.order();
  c.split_hypothesis = split_hypothesis;
  Subgroup z = center(g);
  c.center_split = !complements(g, z).empty();

  if (c.is_weakly_rigid && c.k_rationality.weakly_k_rational) {
    c.conclusions.push_back("premises verified; conclusion: G is a geometric Galois group over k");
    c.conclusions.push_back("G is a regular Galois group over a Galois extension of k of degree dividing |Aut(G)| = " +
                            std::to_string(c.aut_bound));
    if (c.split_hypothesis || c.center_split) {
      c.conclusions.push_back("G is a regular Galois group over a Galois extension of k of degree dividing "
                              "|Nor/(G.Cen)| = " + std::to_string(c.nor_bound) + ", hence |Out(G)| = " +
                              std::to_string(c.out_bound));
      if (c.out_bound == 1) c.conclusions.push_back("Out(G) is trivial: G is a regular Galois group over k");
    }
  }
  return c;
}

RigidityCertificate start(const ClassTuple& ct, Embedding e) {
  RigidityCertificate c;
  c.classes = ct.names();
  c.embedding = e;
  RigidityReport r = is_weakly_rigid(ct, e);
  c.tuple_count = r.tuples.size();
  c.orbit_count_under_normalizer = r.orbits.size();
  c.inner_orbit_count = r.inner_orbits.size();
  c.is_weakly_rigid = r.is_weakly_rigid;
  c.is_rigid = r.is_rigid;
  return c;
}

}  // namespace

RigidityCertificate rigidity_pipeline(const ClassTuple& ct, Embedding e, const std::vector<long long>& exponents,
                                      bool split_hypothesis) {
  RigidityCertificate c = start(ct, e);
  c.rationality = is_weakly_rational(ct, e, exponents);
  if (c.rationality->weakly_rational) {
    c.action = construct_branch_assignment(ct, e, exponents);
    c.k_rationality = is_weakly_k_rational_triple(ct, e, c.action);
  }
  return finish(ct, e, std::move(c), split_hypothesis);
}

RigidityCertificate rigidity_pipeline(const ClassTuple& ct, Embedding e, const GaloisActionData& action,
                                      bool split_hypothesis) {
  RigidityCertificate c = start(ct, e);
  c.action = action;
  c.k_rationality = is_weakly_k_rational_triple(ct, e, action);
  return finish(ct, e, std::move(c), split_hypothesis);
}

}  // namespace pregal
