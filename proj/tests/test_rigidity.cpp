#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pregal/automorphisms.hpp"
#include "pregal/bounds.hpp"
#include "pregal/error.hpp"
#include "pregal/rigidity.hpp"
#include "pregal/symmetric.hpp"
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

// class of x by raw conjugation
std::set<RawPerm> raw_class(const PermGroup& g, const Perm& x) {
  std::set<RawPerm> out;
  for (const auto& w : raw_elements(g)) out.insert(raw_mul(raw_mul(w, raw(x)), raw_inv(w)));
  return out;
}

// all (g_1..g_r) in C_1 x .. x C_r, product one, generating g
std::set<std::vector<RawPerm>> oracle_tuples(const ClassTuple& ct) {
  std::vector<std::vector<RawPerm>> cls;
  for (const ConjClass& c : ct.classes) {
    auto s = raw_class(ct.group, c.representative);
    cls.emplace_back(s.begin(), s.end());
  }
  const std::size_t d = ct.group.degree();
  std::set<std::vector<RawPerm>> out;
  std::vector<std::size_t> idx(cls.size(), 0);
  while (true) {
    std::vector<RawPerm> t;
    RawPerm prod = raw(Perm(d));
    for (std::size_t i = 0; i < cls.size(); ++i) {
      t.push_back(cls[i][idx[i]]);
      prod = raw_mul(prod, t.back());
    }
    if (prod == raw(Perm(d)) && naive_closure(d, t).size() == ct.group.order()) out.insert(t);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == cls[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

std::set<std::vector<RawPerm>> as_raw(const ClassTuple& ct, const std::vector<ClassVector>& tuples) {
  std::set<std::vector<RawPerm>> out;
  for (const auto& t : tuples) {
    std::vector<RawPerm> r;
    for (ElementIndex x : t) r.push_back(raw(ct.group.element(x)));
    out.insert(r);
  }
  return out;
}

// orbit partition of tuples under simultaneous conjugation by the elements of w
std::size_t oracle_orbit_count(const ClassTuple& ct, const std::vector<ClassVector>& tuples,
                               const std::set<RawPerm>& w) {
  auto set = as_raw(ct, tuples);
  std::set<std::vector<RawPerm>> seen;
  std::size_t orbits = 0;
  for (const auto& t : set) {
    if (seen.count(t)) continue;
    ++orbits;
    for (const auto& x : w) {
      std::vector<RawPerm> c;
      for (const auto& g : t) c.push_back(raw_mul(raw_mul(x, g), raw_inv(x)));
      if (set.count(c)) seen.insert(c);
    }
  }
  return orbits;
}

// class of rep^m by raw powering, compared as sets
std::set<RawPerm> raw_power_class(const PermGroup& g, const Perm& rep, long long m) {
  return raw_class(g, rep.pow(m));
}

std::set<RawPerm> s_d(std::size_t d) {
  auto v = all_perms(d);
  return {v.begin(), v.end()};
}

std::set<RawPerm> normalizer_oracle(const PermGroup& g) {
  auto gs = raw_elements(g);
  std::set<RawPerm> out;
  for (const auto& w : s_d(g.degree())) {
    bool ok = true;
    for (const auto& x : gs) ok = ok && gs.count(raw_mul(raw_mul(w, x), raw_inv(w)));
    if (ok) out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("tuple solutions against brute force") {
  PermGroup s3 = symmetric_group(3);
  auto ct = class_tuple(s3, {"2A", "2A", "3A"});
  auto t = tuple_solutions(ct);
  CHECK(t.size() == 6);
  CHECK(as_raw(ct, t) == oracle_tuples(ct));
  CHECK(std::is_sorted(t.begin(), t.end()));

  PermGroup a5 = alternating_group(5);
  auto ca = class_tuple(a5, {"2A", "3A", "5A"});
  CHECK(ca.classes[0].size() * ca.classes[1].size() * ca.classes[2].size() == 15 * 20 * 12);
  auto ta = tuple_solutions(ca);
  CHECK(ta.size() == 60);
  CHECK(as_raw(ca, ta) == oracle_tuples(ca));

  PermGroup c2 = cyclic_group(2);
  auto cc = class_tuple(c2, {"2A", "2A"});
  auto tc = tuple_solutions(cc);
  REQUIRE(tc.size() == 1);
  CHECK(tc[0][0] == tc[0][1]);

  CHECK(kind_of([&] { class_tuple(s3, {"7Q"}); }) == ErrorKind::InvalidInput);
  ClassTuple foreign{s3, {conjugacy_classes(a5)[1]}};
  CHECK(kind_of([&] { tuple_solutions(foreign); }) == ErrorKind::InvalidInput);

  Bounds saved = bounds(), tight = saved;
  tight.max_tuple_space = 100;
  set_bounds(tight);
  CHECK(kind_of([&] { tuple_solutions(ca); }) == ErrorKind::BoundExceeded);
  set_bounds(saved);
}

TEST_CASE("weak rigidity") {
  PermGroup s3 = symmetric_group(3);
  auto ct = class_tuple(s3, {"2A", "2A", "3A"});
  for (Embedding e : {Embedding::Natural, Embedding::Regular}) {
    auto r = is_weakly_rigid(ct, e);
    CHECK(r.is_weakly_rigid);
    CHECK(r.is_rigid);
    CHECK(r.inner_orbits.front().size() == 6);
  }

  PermGroup a5 = alternating_group(5);
  auto ca = class_tuple(a5, {"2A", "3A", "5A"});
  auto r = is_weakly_rigid(ca, Embedding::Regular);
  CHECK(r.is_rigid);
  CHECK(r.is_weakly_rigid);
  REQUIRE(r.inner_orbits.size() == 1);
  CHECK(r.inner_orbits.front().size() == 60);
  CHECK(oracle_orbit_count(ca, r.tuples, raw_elements(a5)) == 1);

  auto c5 = class_tuple(a5, {"5A", "5A", "5A"});
  auto r5 = is_weakly_rigid(c5, Embedding::Natural);
  CHECK(r5.orbits.size() == oracle_orbit_count(c5, r5.tuples, s_d(5)));
  CHECK(r5.inner_orbits.size() == oracle_orbit_count(c5, r5.tuples, raw_elements(a5)));

  // S_5 (3A,4A,6A): 240 tuples in two orbits
  PermGroup s5 = symmetric_group(5);
  auto c6 = class_tuple(s5, {"3A", "4A", "6A"});
  auto r6 = is_weakly_rigid(c6, Embedding::Natural);
  CHECK(r6.tuples.size() == 240);
  CHECK(as_raw(c6, r6.tuples) == oracle_tuples(c6));
  CHECK(r6.orbits.size() == oracle_orbit_count(c6, r6.tuples, s_d(5)));
  CHECK(r6.orbits.size() == 2);
  CHECK_FALSE(r6.is_weakly_rigid);
  CHECK_FALSE(r6.is_rigid);

  // no generating tuple: (2A,2A) in S3
  auto bad = class_tuple(s3, {"2A", "2A"});
  CHECK(kind_of([&] { is_weakly_rigid(bad, Embedding::Natural); }) == ErrorKind::EmptyTupleSet);
}

TEST_CASE("class powering and exponents") {
  PermGroup a5 = alternating_group(5);
  auto classes = conjugacy_classes(a5);
  for (long long m : {1LL, 2LL, 7LL, 11LL, 13LL, -1LL}) {
    auto pm = class_power_map(a5, m);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      CAPTURE(m);
      std::set<RawPerm> expect = raw_power_class(a5, classes[c].representative, m);
      std::set<RawPerm> got;
      for (ElementIndex x : classes[pm[c]].members) got.insert(raw(a5.element(x)));
      CHECK(got == expect);
    }
  }
  CHECK(unit_exponents(a5) == std::vector<long long>{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(lift_unit_exponent(a5, 2, 5) == 7);
  CHECK(lift_unit_exponent(a5, 1, 5) == 1);
  CHECK(kind_of([&] { lift_unit_exponent(a5, 5, 5); }) == ErrorKind::BadExponent);
  // mod 4 the lifts 1 and 13 power 5A differently (5A vs 5B)
  CHECK(kind_of([&] { lift_unit_exponent(a5, 1, 4); }) == ErrorKind::BadExponent);
}

TEST_CASE("weak rationality") {
  PermGroup s3 = symmetric_group(3);
  auto ct = class_tuple(s3, {"2A", "2A", "3A"});
  auto r = is_weakly_rational(ct, Embedding::Regular, unit_exponents(s3));
  CHECK(r.rational);
  CHECK(r.weakly_rational);
  CHECK(is_weakly_rational(ct, Embedding::Natural, {1}).rational);

  PermGroup a5 = alternating_group(5);
  auto ca = class_tuple(a5, {"2A", "3A", "5A"});
  auto all = is_weakly_rational(ca, Embedding::Regular, unit_exponents(a5));
  CHECK(all.weakly_rational);
  CHECK_FALSE(all.rational);

  long long m = lift_unit_exponent(a5, 2, 5);
  auto two = is_weakly_rational(ca, Embedding::Natural, {m});
  CHECK(two.weakly_rational);
  CHECK_FALSE(two.rational);
  REQUIRE(two.exponents.front().automorphism);
  // the witness swaps 5A and 5B: raw check that it is induced by an odd permutation
  const IndexMap& w = *two.exponents.front().automorphism;
  bool odd_inducer = false;
  for (const auto& x : normalizer_oracle(a5)) {
    if (raw_elements(a5).count(x)) continue;
    bool same = true;
    for (ElementIndex y = 0; y < a5.order(); ++y)
      same = same && raw(a5.element(w[y])) == raw_mul(raw_mul(x, raw(a5.element(y))), raw_inv(x));
    odd_inducer = odd_inducer || same;
  }
  CHECK(odd_inducer);

  CHECK(kind_of([&] { is_weakly_rational(ca, Embedding::Natural, {2}); }) == ErrorKind::BadExponent);
  CHECK(kind_of([&] { is_weakly_rational(ca, Embedding::Natural, {15}); }) == ErrorKind::BadExponent);
}

TEST_CASE("weakly k-rational triples") {
  PermGroup s3 = symmetric_group(3);
  auto ct = class_tuple(s3, {"2A", "2A", "3A"});
  GaloisActionData trivial{{{{0, 1, 2}, 1}}};
  auto k = is_weakly_k_rational_triple(ct, Embedding::Natural, trivial);
  CHECK(k.weakly_k_rational);
  CHECK(k.k_rational);

  GaloisActionData swap{{{{0, 1, 2}, 1}, {{1, 0, 2}, 5}}};
  auto ks = is_weakly_k_rational_triple(ct, Embedding::Regular, swap);
  CHECK(ks.weakly_k_rational);

  PermGroup a5 = alternating_group(5);
  auto ca = class_tuple(a5, {"2A", "3A", "5A"});
  GaloisActionData seven{{{{0, 1, 2}, 1}, {{0, 1, 2}, 7}, {{0, 1, 2}, 19}, {{0, 1, 2}, 13}}};
  auto k7 = is_weakly_k_rational_triple(ca, Embedding::Natural, seven);
  CHECK(k7.weakly_k_rational);
  CHECK_FALSE(k7.k_rational);
  REQUIRE(k7.witnesses[1]);
  CHECK(*k7.witnesses[1] != identity_map(60));

  GaloisActionData open{{{{0, 1, 2}, 1}, {{0, 1, 2}, 7}}};  // 7·7 = 49 ≡ 19 missing
  CHECK(kind_of([&] { is_weakly_k_rational_triple(ca, Embedding::Natural, open); }) == ErrorKind::InvalidInput);
  GaloisActionData not_perm{{{{0, 0, 2}, 1}}};
  CHECK(kind_of([&] { is_weakly_k_rational_triple(ca, Embedding::Natural, not_perm); }) == ErrorKind::InvalidInput);
}

TEST_CASE("branch assignment construction") {
  PermGroup s3 = symmetric_group(3);
  auto ct = class_tuple(s3, {"2A", "2A", "3A"});
  auto id = construct_branch_assignment(ct, Embedding::Natural, unit_exponents(s3));
  for (const auto& r : id.records) CHECK(r.branch_perm == std::vector<std::size_t>{0, 1, 2});
  CHECK(is_weakly_k_rational_triple(ct, Embedding::Natural, id).k_rational);

  PermGroup a5 = alternating_group(5);
  auto ca = class_tuple(a5, {"2A", "3A", "5A"});
  auto a = construct_branch_assignment(ca, Embedding::Natural, {lift_unit_exponent(a5, 2, 5)});
  for (const auto& r : a.records) CHECK(r.branch_perm == std::vector<std::size_t>{0, 1, 2});
  auto ka = is_weakly_k_rational_triple(ca, Embedding::Natural, a);
  CHECK(ka.weakly_k_rational);
  CHECK_FALSE(ka.k_rational);

  // C_3 = <(0 1 2)>: (3A, 3B) swapped by squaring, rational classes in the
  // sense that ω = 1 suffices once the slots are exchanged
  PermGroup c3 = cyclic_group(3);
  auto cc = class_tuple(c3, {"3A", "3B"});
  auto sw = construct_branch_assignment(cc, Embedding::Natural, {2});
  bool has_swap = false;
  for (const auto& r : sw.records) has_swap = has_swap || r.branch_perm == std::vector<std::size_t>{1, 0};
  CHECK(has_swap);
  CHECK(is_weakly_k_rational_triple(cc, Embedding::Natural, sw).k_rational);

  // F20 is complete and cubing swaps its two classes of 4-cycles' powers:
  // no ω repairs (4A,4A,2A), while (4A,4B,2A) needs exactly a slot swap
  PermGroup f20 = catalog_group("F20");
  auto fixed = class_tuple(f20, {"4A", "4A", "2A"});
  CHECK_FALSE(is_weakly_rational(fixed, Embedding::Natural, {3}).weakly_rational);
  CHECK(kind_of([&] { construct_branch_assignment(fixed, Embedding::Natural, {3}); }) ==
        ErrorKind::NotWeaklyRational);
  CHECK(kind_of([&] { construct_branch_assignment(fixed, Embedding::Regular, {3}); }) ==
        ErrorKind::NotWeaklyRational);
  auto pair = class_tuple(f20, {"4A", "4B", "2A"});
  auto ps = construct_branch_assignment(pair, Embedding::Natural, {3});
  bool transposition = false;
  for (const auto& r : ps.records) transposition = transposition || r.branch_perm == std::vector<std::size_t>{1, 0, 2};
  CHECK(transposition);
  CHECK(is_weakly_k_rational_triple(pair, Embedding::Natural, ps).k_rational);
}

TEST_CASE("rigidity pipeline") {
  PermGroup s3 = symmetric_group(3);
  auto ct = class_tuple(s3, {"2A", "2A", "3A"});
  auto c = rigidity_pipeline(ct, Embedding::Regular, unit_exponents(s3));
  CHECK(c.tuple_count == 6);
  CHECK(c.is_rigid);
  CHECK(c.out_bound == 1);
  CHECK(c.aut_bound == 6);
  CHECK(c.center_split);
  CHECK(std::find(c.conclusions.begin(), c.conclusions.end(),
                  "Out(G) is trivial: G is a regular Galois group over k") != c.conclusions.end());

  PermGroup a5 = alternating_group(5);
  auto ca = class_tuple(a5, {"2A", "3A", "5A"});
  auto c5 = rigidity_pipeline(ca, Embedding::Regular, unit_exponents(a5));
  CHECK(c5.aut_bound == 120);
  CHECK(c5.out_bound == 2);
  CHECK(c5.nor_bound == 2);
  CHECK(c5.tuple_count == 60);
  CHECK(c5.is_weakly_rigid);
  CHECK(c5.k_rationality.weakly_k_rational);
  CHECK_FALSE(c5.conclusions.empty());

  auto cn = rigidity_pipeline(ca, Embedding::Natural, unit_exponents(a5));
  CHECK(cn.nor_bound == 2);

  auto bad = class_tuple(s3, {"2A", "2A"});
  CHECK(kind_of([&] { rigidity_pipeline(bad, Embedding::Natural, std::vector<long long>{1}); }) ==
        ErrorKind::EmptyTupleSet);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ClassTuple> fixture_tuples() {
  std::vector<ClassTuple> out;
  auto add = [&](const PermGroup& g, std::vector<std::string> n) { out.push_back(class_tuple(g, std::move(n))); };
  PermGroup s3 = symmetric_group(3), s4 = symmetric_group(4), a4 = alternating_group(4), a5 = alternating_group(5);
  PermGroup d8 = catalog_group("D8"), c4 = cyclic_group(4), d10 = catalog_group("D10");
  add(s3, {"2A", "2A", "3A"});
  add(s3, {"2A", "2A", "2A", "2A"});
  add(s4, {"2A", "3A", "4A"});
  add(s4, {"2B", "3A", "4A"});
  add(s4, {"2A", "4A", "4A"});
  add(a4, {"2A", "3A", "3B"});
  add(a4, {"3A", "3A", "3A"});
  add(a5, {"2A", "3A", "5A"});
  add(a5, {"2A", "5A", "5B"});
  add(a5, {"3A", "3A", "5A"});
  add(d8, {"2A", "2B", "4A"});
  add(c4, {"4A", "4B"});
  add(d10, {"2A", "2A", "5A", "5B"});
  return out;
}

}  // namespace

TEST_CASE("property: rigid implies weakly rigid; k-rational implies weakly k-rational") {
  for (const ClassTuple& ct : fixture_tuples()) {
    CAPTURE(ct.group.order());
    CAPTURE(ct.names());
    if (tuple_solutions(ct).empty()) continue;
    for (Embedding e : {Embedding::Natural, Embedding::Regular}) {
      auto r = is_weakly_rigid(ct, e);
      if (r.is_rigid) CHECK(r.is_weakly_rigid);
      CHECK(r.orbits.size() <= r.inner_orbits.size());
      auto q = is_weakly_rational(ct, e, unit_exponents(ct.group));
      if (q.rational) CHECK(q.weakly_rational);
      if (q.weakly_rational) {
        auto a = construct_branch_assignment(ct, e, unit_exponents(ct.group));
        auto k = is_weakly_k_rational_triple(ct, e, a);
        CHECK(k.weakly_k_rational);
        if (k.k_rational) CHECK(k.weakly_k_rational);
      }
    }
  }
}

TEST_CASE("property: tuple enumeration is conjugation-equivariant") {
  for (const ClassTuple& ct : fixture_tuples()) {
    CAPTURE(ct.names());
    auto base = as_raw(ct, tuple_solutions(ct));
    CHECK(base == oracle_tuples(ct));
    PermGroup g = ct.group;
    for (const Perm& w : g.generators()) {
      // replace each class representative by a conjugate: same classes, same set
      ClassTuple moved = ct;
      for (ConjClass& c : moved.classes) c.representative = c.representative.conjugated_by(w);
      CHECK(as_raw(moved, tuple_solutions(moved)) == base);
    }
    // conjugating by the normalizer permutes the solution sets of the conjugate classes
    for (const auto& x : normalizer_oracle(g)) {
      std::set<std::vector<RawPerm>> img;
      for (const auto& t : base) {
        std::vector<RawPerm> c;
        for (const auto& y : t) c.push_back(raw_mul(raw_mul(x, y), raw_inv(x)));
        img.insert(c);
      }
      CHECK(img.size() == base.size());
      auto first = *img.begin();
      std::vector<std::string> names;
      auto classes = conjugacy_classes(g);
      for (const auto& y : first) {
        std::vector<Point> v(y.begin(), y.end());
        names.push_back(classes[class_index_of(classes, g.index_of(Perm(v)))].name);
      }
      CHECK(as_raw(ct, tuple_solutions(class_tuple(g, names))) == img);
    }
  }
}

TEST_CASE("property: class powering depends on m mod exp(G)") {
  for (const char* n : {"S3", "S4", "A4", "A5", "D8", "Q8", "C6", "F20"}) {
    PermGroup g = catalog_group(n);
    const long long e = static_cast<long long>(exponent(g));
    for (long long m : unit_exponents(g)) {
      CAPTURE(n);
      CHECK(class_power_map(g, m) == class_power_map(g, m + e));
      CHECK(class_power_map(g, m) == class_power_map(g, m - 3 * e));
    }
  }
}

TEST_CASE("property: regular embedding orbits match Aut orbits") {
  for (const ClassTuple& ct : fixture_tuples()) {
    if (ct.group.order() > 8 || tuple_solutions(ct).empty()) continue;
    CAPTURE(ct.names());
    const PermGroup& g = ct.group;
    auto reg = regular_representation(g);
    // the same tuple problem for λ(G) <= S_{|G|}, with Nor computed in S_{|G|}
    ClassTuple lifted{reg.image, {}};
    auto lc = conjugacy_classes(reg.image);
    for (const ConjClass& c : ct.classes)
      lifted.classes.push_back(lc[class_index_of(lc, reg.image.index_of(reg.embedding[g.index_of(c.representative)]))]);
    auto via_aut = is_weakly_rigid(ct, Embedding::Regular);
    auto via_nor = is_weakly_rigid(lifted, Embedding::Natural);
    CHECK(via_aut.tuples.size() == via_nor.tuples.size());
    CHECK(via_aut.orbits.size() == via_nor.orbits.size());
    std::vector<std::size_t> a, b;
    for (const auto& o : via_aut.orbits) a.push_back(o.size());
    for (const auto& o : via_nor.orbits) b.push_back(o.size());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}
