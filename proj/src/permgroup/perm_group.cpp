#include "pregal/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "pregal/bounds.hpp"
#include "pregal/error.hpp"

namespace pregal {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

struct PermGroup::Data {
  std::size_t degree = 1;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  std::unordered_map<Perm, ElementIndex, PermHash> index;
  std::vector<ElementIndex> inverses;

  mutable std::once_flag table_once;
  mutable std::vector<ElementIndex> table;

  ElementIndex lookup(const Perm& p) const {
    auto it = index.find(p);
    if (it == index.end()) fail(ErrorKind::NotSubgroup, "permutation " + p.to_string() + " is not a group element");
    return it->second;
  }

  ElementIndex slow_multiply(ElementIndex a, ElementIndex b) const {
    return lookup(elements[a] * elements[b]);
  }

  void build_table() const {
    const std::size_t n = elements.size();
    std::vector<ElementIndex> gens;
    for (const Perm& g : generators)
      if (!g.is_identity()) gens.push_back(lookup(g));
    // right multiplication by each generator
    std::vector<std::vector<ElementIndex>> right(gens.size(), std::vector<ElementIndex>(n));
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (std::size_t i = 0; i < n; ++i)
        right[s][i] = slow_multiply(static_cast<ElementIndex>(i), gens[s]);
    // spanning tree from the identity: element j = parent[j] * gens[via[j]]
    std::vector<ElementIndex> order{0};
    std::vector<ElementIndex> parent(n, 0), via(n, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      ElementIndex x = order[head];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        ElementIndex y = right[s][x];
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        via[y] = static_cast<ElementIndex>(s);
        order.push_back(y);
      }
    }
    table.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ElementIndex* row = table.data() + i * n;
      row[0] = static_cast<ElementIndex>(i);
      for (std::size_t k = 1; k < order.size(); ++k) {
        ElementIndex j = order[k];
        row[j] = right[via[j]][row[parent[j]]];
      }
    }
  }
};

PermGroup::PermGroup() : PermGroup(build(1, {}, {Perm(1)})) {}

PermGroup PermGroup::build(std::size_t degree, std::vector<Perm> generators,
                           std::vector<Perm> sorted_elements) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->elements = std::move(sorted_elements);
  d->index.reserve(d->elements.size() * 2);
  for (std::size_t i = 0; i < d->elements.size(); ++i)
    d->index.emplace(d->elements[i], static_cast<ElementIndex>(i));
  d->inverses.resize(d->elements.size());
  for (std::size_t i = 0; i < d->elements.size(); ++i)
    d->inverses[i] = d->lookup(d->elements[i].inverse());

  if (generators.empty() && d->elements.size() > 1) {
    // greedy: prefer elements of large order
    const std::size_t n = d->elements.size();
    std::vector<ElementIndex> by_order(n);
    std::iota(by_order.begin(), by_order.end(), ElementIndex{0});
    std::vector<std::size_t> ord(n);
    for (std::size_t i = 0; i < n; ++i) ord[i] = d->elements[i].order();
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](ElementIndex a, ElementIndex b) { return ord[a] > ord[b]; });
    std::vector<bool> in(n, false);
    in[0] = true;
    std::vector<ElementIndex> members{0};
    std::vector<ElementIndex> gens;
    for (ElementIndex c : by_order) {
      if (members.size() == n) break;
      if (in[c]) continue;
      gens.push_back(c);
      for (std::size_t head = 0; head < members.size(); ++head) {
        for (ElementIndex g : gens) {
          ElementIndex y = d->slow_multiply(members[head], g);
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
          }
        }
      }
    }
    for (ElementIndex g : gens) generators.push_back(d->elements[g]);
  }
  d->generators = std::move(generators);
  return PermGroup(std::shared_ptr<const Data>(std::move(d)));
}

PermGroup PermGroup::closure(std::size_t degree, std::vector<Perm> generators) {
  if (degree == 0) fail(ErrorKind::InvalidInput, "degree must be positive");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      fail(ErrorKind::DegreeMismatch, "generator " + g.to_string() + " has degree " +
                                          std::to_string(g.degree()) + ", expected " +
                                          std::to_string(degree));
  const std::size_t bound = bounds().max_elements;
  std::vector<Perm> elements{Perm(degree)};
  std::unordered_set<Perm, PermHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& g : generators) {
      Perm y = elements[head] * g;
      if (seen.insert(y).second) {
        elements.push_back(std::move(y));
        if (elements.size() > bound)
          fail(ErrorKind::BoundExceeded,
               "group closure exceeds the element bound of " + std::to_string(bound));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return build(degree, std::move(generators), std::move(elements));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    fail(ErrorKind::NotSubgroup, "element list does not contain the identity");
  return build(degree, {}, std::move(elements));
}

std::size_t PermGroup::degree() const noexcept { return data_->degree; }
std::size_t PermGroup::order() const noexcept { return data_->elements.size(); }
const std::vector<Perm>& PermGroup::generators() const noexcept { return data_->generators; }
std::span<const Perm> PermGroup::elements() const noexcept { return data_->elements; }
const Perm& PermGroup::element(ElementIndex i) const { return data_->elements.at(i); }

std::optional<ElementIndex> PermGroup::find(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

ElementIndex PermGroup::index_of(const Perm& p) const { return data_->lookup(p); }

ElementIndex PermGroup::multiply(ElementIndex a, ElementIndex b) const {
  const std::size_t n = order();
  if (n <= kTableLimit) {
    std::call_once(data_->table_once, [this] { data_->build_table(); });
    return data_->table[a * n + b];
  }
  return data_->slow_multiply(a, b);
}

ElementIndex PermGroup::inverse(ElementIndex a) const { return data_->inverses[a]; }

ElementIndex PermGroup::conjugate(ElementIndex x, ElementIndex by) const {
  return multiply(multiply(by, x), inverse(by));
}

ElementIndex PermGroup::power(ElementIndex a, long long e) const {
  return index_of(element(a).pow(e));
}

std::size_t PermGroup::element_order(ElementIndex a) const { return element(a).order(); }

std::vector<ElementIndex> PermGroup::generator_indices() const {
  std::vector<ElementIndex> out;
  for (const Perm& g : generators())
    if (!g.is_identity()) out.push_back(index_of(g));
  return out;
}

bool PermGroup::is_abelian() const {
  auto gens = generator_indices();
  for (ElementIndex a : gens)
    for (ElementIndex b : gens)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  if (a.data_ == b.data_) return true;
  return a.degree() == b.degree() && a.data_->elements == b.data_->elements;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::generated_by(const PermGroup& parent, std::span<const Perm> gens) {
  std::vector<ElementIndex> idx;
  for (const Perm& g : gens) {
    if (g.degree() != parent.degree())
      fail(ErrorKind::DegreeMismatch, "generator degree differs from the group degree");
    idx.push_back(parent.index_of(g));
  }
  return generated_by_indices(parent, idx);
}

Subgroup Subgroup::generated_by_indices(const PermGroup& parent, std::span<const ElementIndex> gens) {
  std::vector<bool> in(parent.order(), false);
  std::vector<ElementIndex> members{0};
  in[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (ElementIndex g : gens) {
      ElementIndex y = parent.multiply(members[head], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(parent, std::move(members));
}

Subgroup Subgroup::from_members(const PermGroup& parent, std::vector<ElementIndex> members) {
  return Subgroup(parent, std::move(members));
}

Subgroup Subgroup::whole(const PermGroup& parent) {
  std::vector<ElementIndex> m(parent.order());
  std::iota(m.begin(), m.end(), ElementIndex{0});
  return Subgroup(parent, std::move(m));
}

Subgroup Subgroup::trivial(const PermGroup& parent) { return Subgroup(parent, {0}); }

bool Subgroup::contains(ElementIndex i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool Subgroup::contains(const Perm& p) const {
  auto i = parent_.find(p);
  return i && contains(*i);
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

bool Subgroup::is_normal() const {
  auto hs = generators();
  for (ElementIndex s : parent_.generator_indices())
    for (ElementIndex h : hs)
      if (!contains(parent_.conjugate(h, s))) return false;
  return true;
}

std::vector<Perm> Subgroup::elements() const {
  std::vector<Perm> out;
  out.reserve(members_.size());
  for (ElementIndex i : members_) out.push_back(parent_.element(i));
  return out;
}

std::vector<ElementIndex> Subgroup::generators() const {
  std::vector<bool> in(parent_.order(), false);
  in[0] = true;
  std::vector<ElementIndex> closed{0};
  std::vector<ElementIndex> gens;
  std::vector<ElementIndex> by_order(members_.begin(), members_.end());
  std::stable_sort(by_order.begin(), by_order.end(), [&](ElementIndex a, ElementIndex b) {
    return parent_.element_order(a) > parent_.element_order(b);
  });
  for (ElementIndex c : by_order) {
    if (closed.size() == members_.size()) break;
    if (in[c]) continue;
    gens.push_back(c);
    for (std::size_t head = 0; head < closed.size(); ++head) {
      for (ElementIndex g : gens) {
        ElementIndex y = parent_.multiply(closed[head], g);
        if (!in[y]) {
          in[y] = true;
          closed.push_back(y);
        }
      }
    }
  }
  return gens;
}

PermGroup Subgroup::as_group() const {
  return PermGroup::from_elements(parent_.degree(), elements());
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members_ < b.members_;
}

// ---------------------------------------------------------------------------
// Classes

bool ConjClass::contains(ElementIndex i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) {
  const std::size_t n = g.order();
  auto gens = g.generator_indices();
  std::vector<bool> done(n, false);
  std::vector<ConjClass> classes;
  for (ElementIndex x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<ElementIndex> orbit{x};
    done[x] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (ElementIndex s : gens) {
        ElementIndex y = g.conjugate(orbit[head], s);
        if (!done[y]) {
          done[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjClass c;
    c.parent = g;
    c.representative = g.element(orbit.front());
    c.element_order = c.representative.order();
    c.members = std::move(orbit);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  std::map<std::size_t, int> letters;
  for (ConjClass& c : classes) {
    int k = letters[c.element_order]++;
    std::string suffix;
    // A..Z, then AA, AB, ...
    do {
      suffix.insert(suffix.begin(), static_cast<char>('A' + k % 26));
      k = k / 26 - 1;
    } while (k >= 0);
    c.name = std::to_string(c.element_order) + suffix;
  }
  return classes;
}

std::size_t class_index_of(const std::vector<ConjClass>& classes, ElementIndex i) {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].contains(i)) return c;
  fail(ErrorKind::InvalidInput, "element not covered by the class list");
}

// ---------------------------------------------------------------------------
// Normalizers, centralizers and friends

namespace {

void require_parent(const PermGroup& g, const Subgroup& h) {
  if (!(h.parent() == g)) fail(ErrorKind::NotSubgroup, "subgroup belongs to a different group");
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent() == b.parent()))
    fail(ErrorKind::NotSubgroup, "subgroups belong to different groups");
}

}  // namespace

Subgroup normalizer(const PermGroup& g, const Subgroup& h) {
  require_parent(g, h);
  auto hs = h.generators();
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementIndex s : hs)
      if (!h.contains(g.conjugate(s, x))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup centralizer(const PermGroup& g, std::span<const Perm> s) {
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const Perm& p = g.element(x);
    bool ok = true;
    for (const Perm& t : s) {
      if (t.degree() != p.degree()) fail(ErrorKind::DegreeMismatch, "centralizer degree mismatch");
      if (p * t != t * p) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup center(const PermGroup& g) { return centralizer(g, g.generators()); }

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<ElementIndex> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Subgroup::from_members(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  auto gens = a.generators();
  auto gb = b.generators();
  gens.insert(gens.end(), gb.begin(), gb.end());
  return Subgroup::generated_by_indices(a.parent(), gens);
}

std::vector<ElementIndex> product_set(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const PermGroup& g = a.parent();
  std::vector<bool> in(g.order(), false);
  for (ElementIndex x : a.members())
    for (ElementIndex y : b.members()) in[g.multiply(x, y)] = true;
  std::vector<ElementIndex> out;
  for (ElementIndex i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<ElementIndex>> left_cosets(const Subgroup& h) {
  const PermGroup& g = h.parent();
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<ElementIndex>> out;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<ElementIndex> coset;
    coset.reserve(h.order());
    for (ElementIndex y : h.members()) {
      ElementIndex z = g.multiply(x, y);
      done[z] = true;
      coset.push_back(z);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

Subgroup core(const Subgroup& h) {
  const PermGroup& g = h.parent();
  std::vector<ElementIndex> current(h.members().begin(), h.members().end());
  for (const auto& coset : left_cosets(h)) {
    ElementIndex x = coset.front();
    std::vector<ElementIndex> conj;
    conj.reserve(h.order());
    for (ElementIndex y : h.members()) conj.push_back(g.conjugate(y, x));
    std::sort(conj.begin(), conj.end());
    std::vector<ElementIndex> next;
    std::set_intersection(current.begin(), current.end(), conj.begin(), conj.end(),
                          std::back_inserter(next));
    current = std::move(next);
    if (current.size() == 1) break;
  }
  return Subgroup::from_members(g, std::move(current));
}

Subgroup normal_closure(const PermGroup& g, std::span<const ElementIndex> s) {
  std::vector<ElementIndex> gens(s.begin(), s.end());
  Subgroup n = Subgroup::generated_by_indices(g, gens);
  auto ggens = g.generator_indices();
  for (;;) {
    bool grew = false;
    for (ElementIndex x : n.generators()) {
      for (ElementIndex t : ggens) {
        ElementIndex y = g.conjugate(x, t);
        if (!n.contains(y)) {
          gens.push_back(y);
          grew = true;
        }
      }
    }
    if (!grew) return n;
    n = Subgroup::generated_by_indices(g, gens);
  }
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  const std::size_t d = g.degree();
  std::vector<bool> seen(d, false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < d; ++p) {
    if (seen[p]) continue;
    std::vector<Point> orbit{p};
    seen[p] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const Perm& s : g.generators()) {
        Point q = s[orbit[head]];
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

Subgroup point_stabilizer(const PermGroup& g, Point p) {
  if (p >= g.degree()) fail(ErrorKind::DegreeMismatch, "point outside the group degree");
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (g.element(x)[p] == p) members.push_back(x);
  return Subgroup::from_members(g, std::move(members));
}

std::size_t exponent(const PermGroup& g) {
  std::size_t e = 1;
  for (ElementIndex x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

bool is_simple(const PermGroup& g) {
  if (g.order() == 1) return false;
  for (const ConjClass& c : conjugacy_classes(g)) {
    if (c.members.front() == PermGroup::identity()) continue;
    ElementIndex x = c.members.front();
    if (!normal_closure(g, std::span<const ElementIndex>(&x, 1)).is_whole()) return false;
  }
  return true;
}

CosetAction coset_action(const Subgroup& h) {
  const PermGroup& g = h.parent();
  CosetAction out;
  out.cosets = left_cosets(h);
  out.coset_of.assign(g.order(), 0);
  for (std::size_t c = 0; c < out.cosets.size(); ++c)
    for (ElementIndex x : out.cosets[c]) out.coset_of[x] = c;
  const std::size_t m = out.cosets.size();
  out.action.reserve(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) {
    std::vector<Point> images(m);
    for (std::size_t c = 0; c < m; ++c)
      images[c] = static_cast<Point>(out.coset_of[g.multiply(x, out.cosets[c].front())]);
    out.action.emplace_back(std::move(images));
  }
  std::vector<Perm> gens;
  for (ElementIndex s : g.generator_indices()) gens.push_back(out.action[s]);
  out.image = PermGroup::closure(m, std::move(gens));
  return out;
}

PermGroup quotient(const Subgroup& n) {
  if (!n.is_normal()) fail(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  return coset_action(n).image;
}

RegularRepresentation regular_representation(const PermGroup& g) {
  const std::size_t n = g.order();
  if (n > bounds().max_elements)
    fail(ErrorKind::BoundExceeded, "regular representation degree exceeds the element bound");
  RegularRepresentation out;
  out.embedding.reserve(n);
  for (ElementIndex x = 0; x < n; ++x) {
    std::vector<Point> images(n);
    for (ElementIndex y = 0; y < n; ++y) images[y] = g.multiply(x, y);
    out.embedding.emplace_back(std::move(images));
  }
  out.image = PermGroup::from_elements(n, out.embedding);
  return out;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t d = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) gens.push_back(g.extended(d, 0));
  for (const Perm& g : b.generators()) gens.push_back(g.extended(d, a.degree()));
  return PermGroup::closure(d, std::move(gens));
}

}  // namespace pregal
