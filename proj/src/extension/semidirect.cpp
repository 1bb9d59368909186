#include <algorithm>

#include "pregal/automorphisms.hpp"
#include "pregal/error.hpp"
#include "pregal/extension.hpp"
#include "pregal/homomorphism.hpp"

namespace pregal {

namespace {

void check_action(const PermGroup& n, const PermGroup& a, const std::vector<IndexMap>& action) {
  if (action.size() != a.order())
    fail(ErrorKind::NotAHomomorphism, "action table must have one entry per element of A");
  for (const IndexMap& m : action)
    if (m.size() != n.order() || !is_automorphism(n, m))
      fail(ErrorKind::NotAHomomorphism, "action entry is not an automorphism of N");
  if (action[0] != identity_map(n.order()))
    fail(ErrorKind::NotAHomomorphism, "identity of A must act trivially");
  for (ElementIndex x = 0; x < a.order(); ++x)
    for (ElementIndex y = 0; y < a.order(); ++y)
      if (action[a.multiply(x, y)] != compose(action[x], action[y]))
        fail(ErrorKind::NotAHomomorphism, "A -> Aut(N) does not respect products");
}

}  // namespace

std::vector<IndexMap> trivial_action(const PermGroup& n, const PermGroup& a) {
  return std::vector<IndexMap>(a.order(), identity_map(n.order()));
}

std::vector<IndexMap> action_from_generator_images(const PermGroup& n, const PermGroup& a,
                                                   const std::vector<IndexMap>& generator_auts) {
  const auto gens = a.generator_indices();
  if (generator_auts.size() != gens.size())
    fail(ErrorKind::NotAHomomorphism, "need one automorphism per generator of A");
  std::vector<IndexMap> table(a.order());
  table[0] = identity_map(n.order());
  std::vector<ElementIndex> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementIndex x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      ElementIndex y = a.multiply(x, gens[i]);
      IndexMap m = compose(table[x], generator_auts[i]);
      if (table[y].empty()) {
        table[y] = std::move(m);
        queue.push_back(y);
      } else if (table[y] != m) {
        fail(ErrorKind::NotAHomomorphism, "generator automorphisms violate a relation of A");
      }
    }
  }
  check_action(n, a, table);
  return table;
}

SemidirectProduct semidirect_product(const PermGroup& n, const PermGroup& a,
                                     const std::vector<IndexMap>& action) {
  check_action(n, a, action);
  const std::size_t nn = n.order(), na = a.order(), deg = nn + na;

  auto model = [&](ElementIndex x, ElementIndex y) {
    std::vector<Point> img(deg);
    for (ElementIndex m = 0; m < nn; ++m) img[m] = n.multiply(x, action[y][m]);
    for (ElementIndex b = 0; b < na; ++b) img[nn + b] = static_cast<Point>(nn + a.multiply(y, b));
    return Perm(std::move(img));
  };

  SemidirectProduct out;
  out.action = action;
  std::vector<Perm> all;
  all.reserve(nn * na);
  for (ElementIndex x = 0; x < nn; ++x)
    for (ElementIndex y = 0; y < na; ++y) all.push_back(model(x, y));
  for (ElementIndex x = 0; x < nn; ++x) out.embed_n.push_back(model(x, 0));
  for (ElementIndex y = 0; y < na; ++y) out.embed_a.push_back(model(0, y));
  out.group = PermGroup::from_elements(deg, std::move(all));
  out.normal = Subgroup::generated_by(out.group, out.embed_n);
  out.complement = Subgroup::generated_by(out.group, out.embed_a);
  return out;
}

SplitCertificate split_to_direct(const PermGroup& g, const PermGroup& a,
                                 const std::vector<IndexMap>& action) {
  SplitCertificate cert;
  cert.product = semidirect_product(g, a, action);

  if (outer_order(g) != 1) fail(ErrorKind::HypothesisFailed, "Out(G) is not trivial");
  Subgroup z = center(g);
  auto sections = complements(g, z);
  if (sections.empty())
    fail(ErrorKind::HypothesisFailed, "1 -> Z(G) -> G -> Inn(G) -> 1 does not split");
  const Subgroup& s = sections.front();  // σ(Inn(G)); normal since Z is central

  const auto gens = g.generator_indices();
  cert.inner_part.resize(a.order());
  for (ElementIndex y = 0; y < a.order(); ++y) {
    std::optional<ElementIndex> found;
    for (ElementIndex x = 0; x < g.order() && !found; ++x) {
      bool match = true;
      for (ElementIndex h : gens) match = match && g.conjugate(h, x) == action[y][h];
      if (match) found = x;
    }
    if (!found) fail(ErrorKind::HypothesisFailed, "acting automorphism is not inner");
    for (ElementIndex c : z.members()) {
      ElementIndex sx = g.multiply(*found, c);
      if (s.contains(sx)) {
        cert.inner_part[y] = sx;
        break;
      }
    }
  }

  const PermGroup& gg = cert.product.group;
  std::vector<Perm> star;
  for (ElementIndex y = 0; y < a.order(); ++y)
    star.push_back(cert.product.embed_n[g.inverse(cert.inner_part[y])] * cert.product.embed_a[y]);
  cert.a_star = Subgroup::generated_by(gg, star);
  if (cert.a_star.order() != a.order())
    fail(ErrorKind::HypothesisFailed, "section does not yield a subgroup isomorphic to A");

  const Subgroup& gn = cert.product.normal;
  cert.trivial_intersection = intersection(gn, cert.a_star).is_trivial();
  cert.commutes = true;
  for (ElementIndex x : gn.members())
    for (ElementIndex y : cert.a_star.members())
      cert.commutes = cert.commutes && gg.multiply(x, y) == gg.multiply(y, x);
  cert.generates = join(gn, cert.a_star).is_whole();

  // (n, a) = (n c(a), 1)(c(a)^{-1}, a) -> (n c(a), a)
  cert.direct = direct_product(g, a);
  const std::size_t deg = cert.direct.degree();
  cert.isomorphism.assign(gg.order(), 0);
  for (ElementIndex x = 0; x < g.order(); ++x)
    for (ElementIndex y = 0; y < a.order(); ++y) {
      ElementIndex src = gg.index_of(cert.product.embed_n[x] * cert.product.embed_a[y]);
      const Perm& left = g.element(g.multiply(x, cert.inner_part[y]));
      Perm img = left.extended(deg, 0) * a.element(y).extended(deg, g.degree());
      cert.isomorphism[src] = cert.direct.index_of(img);
    }
  GroupHom::from_map(gg, cert.direct, cert.isomorphism);  // throws if not a homomorphism
  return cert;
}

}  // namespace pregal
