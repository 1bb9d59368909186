#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pregal/automorphisms.hpp"
#include "pregal/error.hpp"
#include "pregal/geometric.hpp"
#include "test_support.hpp"

using namespace pregal;
using namespace pregal::testing;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidInput;
}

// (x, y, (xy)^{-1}) with x, y of the given orders generating g
std::vector<Perm> triple(const PermGroup& g, std::size_t o1, std::size_t o2, std::size_t o3) {
  for (const Perm& x : g.elements())
    for (const Perm& y : g.elements()) {
      if (x.order() != o1 || y.order() != o2 || (x * y).order() != o3) continue;
      if (PermGroup::closure(g.degree(), {x, y}).order() != g.order()) continue;
      return {x, y, (x * y).inverse()};
    }
  FAIL("no triple");
  return {};
}

GroupHom projection(const PermGroup& prod, const PermGroup& factor, std::size_t offset) {
  IndexMap m(prod.order());
  for (ElementIndex x = 0; x < prod.order(); ++x) {
    std::vector<Point> img(factor.degree());
    for (std::size_t i = 0; i < factor.degree(); ++i)
      img[i] = static_cast<Point>(prod.element(x)[static_cast<Point>(offset + i)] - offset);
    m[x] = factor.index_of(Perm(img));
  }
  return GroupHom::from_map(prod, factor, m);
}

// elements of G whose order divides n
std::vector<Perm> orders_dividing(const PermGroup& g, std::size_t n) {
  std::vector<Perm> out;
  for (const Perm& x : g.elements())
    if (n % x.order() == 0) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("branch cycle descriptions") {
  Perm a = cyc(4, {{0, 1, 2, 3}});
  BranchCycleDescription b({a, a.inverse()});
  CHECK(b.group().order() == 4);
  CHECK(b.branch_labels() == std::vector<std::string>{"t1", "t2"});
  CHECK(kind_of([&] { BranchCycleDescription({a, a}); }) == ErrorKind::InvalidInput);
  Perm t = cyc(4, {{0, 1}});
  CHECK(kind_of([&] { BranchCycleDescription({t, t}); }) == ErrorKind::InvalidInput);  // intransitive

  auto c = b.conjugated_by(cyc(4, {{1, 3}}));
  Perm prod(4);
  for (const Perm& g : c.tuple()) prod = prod * g;
  CHECK(prod.is_identity());
  CHECK(is_transitive(c.group()));
}

TEST_CASE("monodromy analysis") {
  Perm a = cyc(4, {{0, 1, 2, 3}});
  auto r = monodromy_analysis(BranchCycleDescription({a, a.inverse()}));
  CHECK(r.is_geometrically_galois);
  CHECK(r.constant_extension_bound.order() == 2);
  CHECK(r.bound_matches_aut);

  PermGroup a5 = alternating_group(5);
  auto n = monodromy_analysis(BranchCycleDescription(triple(a5, 2, 3, 5)));
  CHECK_FALSE(n.is_geometrically_galois);

  PermGroup s3 = symmetric_group(3);
  auto reg = regular_representation(s3);
  std::vector<Perm> tup;
  for (const Perm& x : triple(s3, 2, 2, 3)) tup.push_back(reg.embedding[s3.index_of(x)]);
  auto rs = monodromy_analysis(BranchCycleDescription(tup));
  CHECK(rs.is_geometrically_galois);
  CHECK(rs.constant_extension_bound.order() == 6);
  CHECK(rs.bound_matches_aut);
  // oracle: normalizer by filtering all of S6
  auto gset = raw_elements(rs.group);
  std::size_t nor = 0;
  for (const auto& w : all_perms(6)) {
    bool ok = true;
    for (const auto& x : gset) ok = ok && gset.count(raw_mul(raw_mul(w, x), raw_inv(w)));
    nor += ok;
  }
  CHECK(nor / 6 == 6);
}

TEST_CASE("twisting model and twist") {
  PermGroup s3 = symmetric_group(3), c2 = cyclic_group(2);
  auto untw = twisting_model(s3, c2, {Perm(3)});
  auto t0 = twist(untw);
  CHECK(t0.homomorphism_verified);
  for (ElementIndex y = 0; y < untw.pi.order(); ++y) {
    ElementIndex left = untw.phi[y];
    for (ElementIndex e = 0; e < s3.order(); ++e) CHECK(t0.image[y][e] == s3.multiply(left, e));
  }

  auto m = twisting_model(s3, c2, {cyc(3, {{0, 1}})});
  auto t = twist(m);
  CHECK(t.homomorphism_verified);
  std::vector<ElementIndex> ker;
  for (ElementIndex y = 0; y < m.pi.order(); ++y)
    if (m.phi[y] == 0 && m.psi[m.quotient_map[y]] == 0) ker.push_back(y);
  CHECK(std::equal(ker.begin(), ker.end(), t.kernel.members().begin(), t.kernel.members().end()));

  // right translation by ψ on the section image: orbits enumerated directly
  std::vector<RawPerm> gens;
  for (ElementIndex tau = 0; tau < m.q.order(); ++tau) gens.push_back(raw(t.image[m.section[tau]]));
  auto grp = naive_closure(6, gens);
  std::set<std::set<Point>> orbits;
  for (Point p = 0; p < 6; ++p) {
    std::set<Point> o;
    for (const auto& x : grp) o.insert(x[p]);
    orbits.insert(o);
  }
  CHECK(orbits.size() == 3);

  PermGroup c3 = cyclic_group(3);
  auto ab = twisting_model(c3, c2, {Perm(3)});
  CHECK(kind_of([&] { twist(ab); }) == ErrorKind::CenterNotTrivial);
  auto no_point = m;
  no_point.rational_point = false;
  CHECK(kind_of([&] { twist(no_point); }) == ErrorKind::NoRationalPoint);
}

TEST_CASE("specialize") {
  PermGroup s3 = symmetric_group(3), c2 = cyclic_group(2);
  auto m = twisting_model(s3, c2, {cyc(3, {{0, 1}})});
  auto e = specialize(m, true);
  REQUIRE(e.components.size() == 3);
  for (const auto& c : e.components) {
    CHECK(c.degree == 2);
    CHECK(c.stabilizer.is_trivial());
  }
  CHECK(e.total_degree == 6);
  CHECK_FALSE(e.is_field);

  auto split = specialize(m, false);
  CHECK(split.components.size() == 3);
  for (const auto& c : split.components) CHECK(c.degree == 1);

  auto full = twisting_model(s3, s3, s3.generators());
  auto one = specialize(full, true);
  CHECK(one.is_field);
  CHECK(one.components.front().degree == 6);
  // oracle: g -> g·h^{-1} over h in G reaches all six elements from the identity
  std::set<ElementIndex> reach;
  for (ElementIndex h = 0; h < 6; ++h) reach.insert(s3.inverse(h));
  CHECK(reach.size() == 6);
}

TEST_CASE("specialization transfer") {
  PermGroup s4 = symmetric_group(4);
  ExtensionModel m = ExtensionModel::from_stabilizer(s4, 3);
  Subgroup v4 = sub(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  auto r = specialization_transfer(m, v4);
  CHECK(r.factorization_holds);
  CHECK(r.pre_galois_transfer);
  CHECK(r.restated.is_pre_galois == analyze(m).is_pre_galois);
  CHECK(r.restated.complements == analyze(m).complements);
  auto c = specialization_transfer(m, sub(s4, {cyc(4, {{0, 1, 2, 3}})}));
  CHECK_FALSE(c.pre_galois_transfer);
  CHECK(kind_of([&] { specialization_transfer(m, m.gamma_e()); }) == ErrorKind::NotAComplement);
}

TEST_CASE("compositum and powers of simple groups") {
  PermGroup a5 = alternating_group(5);
  PermGroup aa = catalog_group("A5xA5");
  GroupHom p1 = projection(aa, a5, 0), p2 = projection(aa, a5, 5);

  CHECK(compositum_image(aa, {p1}) == a5);
  CHECK(compositum_image(aa, {p1, p2}).order() == 3600);

  GroupHom id = GroupHom::identity(a5);
  PermGroup diag = compositum_image(a5, {id, id});
  CHECK(diag.order() == 60);
  std::set<RawPerm> pairs;
  for (const Perm& x : a5.elements()) pairs.insert(raw(x.extended(10, 0) * x.extended(10, 5)));
  CHECK(raw_elements(diag) == pairs);

  auto two = power_of_simple(aa, {p1, p2});
  CHECK(two.n == 2);
  CHECK(two.full_product);
  CHECK(two.image.order() == 3600);
  auto same = power_of_simple(a5, {id, id});
  CHECK(same.n == 1);
  CHECK(same.image.order() == 60);

  // a third map with the kernel of p1
  IndexMap twisted(aa.order());
  PermGroup s5 = symmetric_group(5);
  Perm t = cyc(5, {{0, 1}});
  for (ElementIndex x = 0; x < aa.order(); ++x) twisted[x] = a5.index_of(a5.element(p1[x]).conjugated_by(t));
  GroupHom p3 = GroupHom::from_map(aa, a5, twisted);
  auto three = power_of_simple(aa, {p1, p2, p3});
  CHECK(three.n == 2);
  CHECK(three.distinct == std::vector<std::size_t>{0, 1});

  PermGroup s3 = symmetric_group(3);
  CHECK(kind_of([&] { power_of_simple(s3, {GroupHom::identity(s3)}); }) == ErrorKind::NotSimple);
  GroupHom triv = GroupHom::trivial(a5, a5);
  CHECK(kind_of([&] { compositum_image(a5, {triv}); }) == ErrorKind::NotSurjective);
}

TEST_CASE("Nor / (G Cen) and Out") {
  auto a6 = nor_gcen_out(alternating_group(6));
  CHECK(a6.quotient.order() == 2);
  CHECK(a6.out_order == 4);
  CHECK(a6.injective);
  CHECK(a6.centralizer.is_trivial());
  CHECK(a6.normalizer.order() == 720);

  for (const char* n : {"C4", "S3", "V4"}) {
    CAPTURE(n);
    auto r = nor_gcen_out(catalog_group(std::string("reg:") + n));
    CHECK(r.quotient.order() == automorphism_group(catalog_group(n)).outer_order());
    CHECK(r.injective);
  }
  for (std::size_t d : {3, 4, 5}) CHECK(nor_gcen_out(symmetric_group(d)).quotient.order() == 1);
}

TEST_CASE("field of moduli group") {
  PermGroup c2 = cyclic_group(2);
  PermGroup a6 = alternating_group(6);
  auto triv = field_of_moduli_group(c2, {Perm(6)}, a6);
  CHECK(triv.h.is_whole());
  CHECK(triv.q_mod_h.order() == 1);
  CHECK(triv.target_order == 2);

  auto odd = field_of_moduli_group(c2, {cyc(6, {{0, 1}})}, a6);
  CHECK(odd.h.is_trivial());
  CHECK(odd.q_mod_h.order() == 2);
  CHECK(odd.injective);

  PermGroup rc4 = catalog_group("reg:C4");
  auto c4 = field_of_moduli_group(c2, {Perm(4)}, rc4);
  CHECK(c4.target_order == 2);
  CHECK(automorphism_group(cyclic_group(4)).outer_order() == 2);

  // C2 generator sent to an element of order 3 mod Cen
  PermGroup v4 = klein_four_group();
  CHECK(kind_of([&] { field_of_moduli_group(c2, {cyc(4, {{0, 1, 2}})}, v4); }) == ErrorKind::NotAHomomorphism);
  CHECK(kind_of([&] { field_of_moduli_group(c2, {cyc(4, {{0, 1}})}, rc4); }) == ErrorKind::NotAHomomorphism);
}

// ---------------------------------------------------------------------------

TEST_CASE("property: twist homomorphism, kernel identity, orbit arithmetic") {
  for (const char* gname : {"S3", "D10", "A4", "S4"}) {
    PermGroup g = catalog_group(gname);
    for (std::size_t n : {2, 3, 4}) {
      PermGroup q = cyclic_group(n);
      for (const Perm& img : orders_dividing(g, n)) {
        CAPTURE(gname);
        CAPTURE(n);
        auto m = twisting_model(g, q, {img});
        auto t = twist(m);
        CHECK(t.homomorphism_verified);
        std::size_t ker = 0;
        for (ElementIndex y = 0; y < m.pi.order(); ++y) {
          bool in = m.phi[y] == 0 && m.psi[m.quotient_map[y]] == 0;
          CHECK(in == t.kernel.contains(y));
          ker += in;
        }
        CHECK(ker == t.kernel.order());

        auto e = specialize(m, true);
        CHECK(e.total_degree == g.order());
        CHECK(e.components.size() == g.order() / m.psi.image().order());
        auto u = specialize(m, false);
        CHECK(u.total_degree == g.degree());
      }
    }
  }
}

TEST_CASE("property: field of moduli degree chain") {
  PermGroup c2 = cyclic_group(2), c4 = cyclic_group(4);
  for (const char* gname : {"A6", "A5", "A4", "reg:C4", "reg:V4", "reg:S3", "D8"}) {
    CAPTURE(gname);
    PermGroup g = catalog_group(gname);
    auto ngc = nor_gcen_out(g);
    CHECK(ngc.out_order % ngc.quotient.order() == 0);
    // one lift per class modulo Cen
    std::vector<char> seen(ngc.nor_mod_cen.order(), 0);
    std::vector<Perm> lifts;
    for (ElementIndex x = 0; x < ngc.normalizer.order(); ++x)
      if (!seen[ngc.mod_cen_of[x]]) {
        seen[ngc.mod_cen_of[x]] = 1;
        lifts.push_back(ngc.normalizer.element(x));
      }
    if (lifts.size() > 60) {  // A6: one per class modulo G·Cen
      lifts.clear();
      std::vector<char> q_seen(ngc.quotient.order(), 0);
      for (ElementIndex x = 0; x < ngc.normalizer.order(); ++x)
        if (!q_seen[ngc.quotient_of[x]]) {
          q_seen[ngc.quotient_of[x]] = 1;
          lifts.push_back(ngc.normalizer.element(x));
        }
    }
    for (const PermGroup* q : {&c2, &c4}) {
      for (const Perm& w : lifts) {
        if (q->order() % w.order() != 0) continue;
        auto f = field_of_moduli_group(*q, {w}, g);
        CHECK(f.h.is_normal());
        CHECK(f.injective);
        CHECK(f.target_order % f.q_mod_h.order() == 0);
      }
    }
  }
}

TEST_CASE("property: branch cycle invariants survive conjugation") {
  PermGroup a5 = alternating_group(5);
  BranchCycleDescription b(triple(a5, 2, 3, 5));
  PermGroup s5 = symmetric_group(5);
  for (const Perm& w : s5.elements()) {
    auto c = b.conjugated_by(w);
    CHECK(c.group().order() == 60);
  }
}
