#include "pregal/automorphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

#include "pregal/bounds.hpp"
#include "pregal/error.hpp"

namespace pregal {

namespace {

constexpr ElementIndex kUnset = static_cast<ElementIndex>(-1);

// (element order, class size) per element
std::vector<std::pair<std::size_t, std::size_t>> signatures(const PermGroup& g) {
  std::vector<std::pair<std::size_t, std::size_t>> sig(g.order());
  for (const ConjClass& c : conjugacy_classes(g))
    for (ElementIndex x : c.members) sig[x] = {c.element_order, c.size()};
  return sig;
}

void check_bound(const PermGroup& g) {
  if (g.order() > bounds().max_automorphism_order)
    fail(ErrorKind::BoundExceeded, "automorphism search needs |G| <= " +
                                       std::to_string(bounds().max_automorphism_order) +
                                       ", got " + std::to_string(g.order()));
}

// Generating set chosen to keep the candidate lists short.
std::vector<ElementIndex> search_generators(const PermGroup& g,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& sig) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> bucket;
  for (const auto& s : sig) ++bucket[s];
  std::vector<ElementIndex> order(g.order());
  std::iota(order.begin(), order.end(), ElementIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](ElementIndex a, ElementIndex b) {
    // large element order first, then rare signatures
    if (sig[a].first != sig[b].first) return sig[a].first > sig[b].first;
    return bucket[sig[a]] < bucket[sig[b]];
  });
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<ElementIndex> closed{0}, gens;
  for (ElementIndex c : order) {
    if (closed.size() == g.order()) break;
    if (in[c]) continue;
    gens.push_back(c);
    for (std::size_t head = 0; head < closed.size(); ++head)
      for (ElementIndex s : gens) {
        ElementIndex y = g.multiply(closed[head], s);
        if (!in[y]) {
          in[y] = 1;
          closed.push_back(y);
        }
      }
  }
  return gens;
}

// Backtracking over images of `gens` in h. `emit` returns false to stop.
class HomSearch {
 public:
  HomSearch(const PermGroup& g, const PermGroup& h, std::vector<ElementIndex> gens,
            std::vector<std::vector<ElementIndex>> candidates)
      : g_(g), h_(h), gens_(std::move(gens)), candidates_(std::move(candidates)) {}

  void run(const std::function<bool(const IndexMap&)>& emit) {
    images_.assign(gens_.size(), 0);
    emit_ = &emit;
    descend(0);
  }

 private:
  // Extends the map over <gens_[0..depth)>; false on an inconsistency.
  bool extend(std::size_t depth, IndexMap& map) const {
    map.assign(g_.order(), kUnset);
    map[0] = 0;
    std::vector<ElementIndex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ElementIndex x = queue[head];
      for (std::size_t j = 0; j < depth; ++j) {
        ElementIndex y = g_.multiply(x, gens_[j]);
        ElementIndex img = h_.multiply(map[x], images_[j]);
        if (map[y] == kUnset) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(std::size_t depth) {
    if (depth == gens_.size()) {
      IndexMap map;
      if (!extend(depth, map)) return true;
      std::vector<char> hit(h_.order(), 0);
      for (ElementIndex v : map) {
        if (hit[v]) return true;  // not injective
        hit[v] = 1;
      }
      return (*emit_)(map);
    }
    IndexMap scratch;
    for (ElementIndex c : candidates_[depth]) {
      images_[depth] = c;
      if (!extend(depth + 1, scratch)) continue;
      if (!descend(depth + 1)) return false;
    }
    return true;
  }

  const PermGroup& g_;
  const PermGroup& h_;
  std::vector<ElementIndex> gens_;
  std::vector<std::vector<ElementIndex>> candidates_;
  std::vector<ElementIndex> images_;
  const std::function<bool(const IndexMap&)>* emit_ = nullptr;
};

std::vector<std::vector<ElementIndex>> candidate_lists(
    const std::vector<ElementIndex>& gens,
    const std::vector<std::pair<std::size_t, std::size_t>>& sig_g,
    const std::vector<std::pair<std::size_t, std::size_t>>& sig_h) {
  std::vector<std::vector<ElementIndex>> out;
  for (ElementIndex x : gens) {
    std::vector<ElementIndex> c;
    for (ElementIndex y = 0; y < sig_h.size(); ++y)
      if (sig_h[y] == sig_g[x]) c.push_back(y);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

AutomorphismGroup automorphism_group(const PermGroup& g) {
  check_bound(g);
  AutomorphismGroup out;
  out.group = g;
  out.center_order = center(g).order();
  if (g.order() == 1) {
    out.automorphisms.push_back(identity_map(1));
    return out;
  }
  auto sig = signatures(g);
  auto gens = search_generators(g, sig);
  HomSearch search(g, g, gens, candidate_lists(gens, sig, sig));
  search.run([&](const IndexMap& m) {
    out.automorphisms.push_back(m);
    return true;
  });
  std::sort(out.automorphisms.begin(), out.automorphisms.end());
  return out;
}

std::size_t outer_order(const PermGroup& g) { return automorphism_group(g).outer_order(); }

std::optional<IndexMap> find_isomorphism(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() == 1) return identity_map(1);
  check_bound(g);
  auto sig_g = signatures(g);
  auto sig_h = signatures(h);
  // class-size multiset together with element orders must agree
  auto hist = [](std::vector<std::pair<std::size_t, std::size_t>> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  if (hist(sig_g) != hist(sig_h)) return std::nullopt;
  auto gens = search_generators(g, sig_g);
  std::optional<IndexMap> found;
  HomSearch search(g, h, gens, candidate_lists(gens, sig_g, sig_h));
  search.run([&](const IndexMap& m) {
    found = m;
    return false;
  });
  return found;
}

bool is_isomorphic(const PermGroup& g, const PermGroup& h) {
  return find_isomorphism(g, h).has_value();
}

bool is_automorphism(const PermGroup& g, const IndexMap& m) {
  if (m.size() != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (ElementIndex v : m) {
    if (v >= g.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b)
      if (m[g.multiply(a, b)] != g.multiply(m[a], m[b])) return false;
  return true;
}

IndexMap inner_automorphism(const PermGroup& g, ElementIndex x) {
  IndexMap m(g.order());
  for (ElementIndex y = 0; y < g.order(); ++y) m[y] = g.conjugate(y, x);
  return m;
}

IndexMap identity_map(std::size_t n) {
  IndexMap m(n);
  std::iota(m.begin(), m.end(), ElementIndex{0});
  return m;
}

IndexMap compose(const IndexMap& outer, const IndexMap& inner) {
  IndexMap m(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) m[i] = outer[inner[i]];
  return m;
}

IndexMap invert(const IndexMap& m) {
  IndexMap out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[m[i]] = static_cast<ElementIndex>(i);
  return out;
}

PermGroup automorphisms_as_group(const AutomorphismGroup& aut) {
  std::vector<Perm> perms;
  perms.reserve(aut.automorphisms.size());
  for (const IndexMap& m : aut.automorphisms)
    perms.emplace_back(std::vector<Point>(m.begin(), m.end()));
  return PermGroup::from_elements(aut.group.order(), std::move(perms));
}

IndexMap outer_class_key(const PermGroup& g, const IndexMap& a) {
  IndexMap best;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    IndexMap candidate = compose(a, inner_automorphism(g, x));
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace pregal
