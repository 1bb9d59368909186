#include "pregal/correspondence.hpp"

#include <algorithm>

#include "pregal/automorphisms.hpp"
#include "pregal/error.hpp"
#include "pregal/subgroups.hpp"

namespace pregal {

namespace {

void require_complement(const ExtensionModel& m, const Subgroup& g) {
  if (!(g.parent() == m.gamma()) || !is_complement(m.gamma(), m.gamma_e(), g))
    fail(ErrorKind::NotAComplement, "subgroup is not a complement of gamma_e");
}

// Subgroups of gamma contained in g.
std::vector<Subgroup> subgroups_inside(const Subgroup& g) {
  return subgroups_where(g.parent(), g.order(), [&](const Subgroup& h) { return g.contains(h); });
}

std::vector<Subgroup> f_domain(const Subgroup& g, const Subgroup& a) {
  auto subs = subgroups_inside(g);
  std::erase_if(subs, [&](const Subgroup& h) { return !product_is_subgroup(h, a); });
  return subs;
}

std::size_t position(const std::vector<Subgroup>& v, const Subgroup& s) {
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || !(*it == s)) fail(ErrorKind::InvalidInput, "subgroup missing from domain");
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

Subgroup zs_forward(const Subgroup& h, const Subgroup& a) {
  if (!product_is_subgroup(h, a)) fail(ErrorKind::NotSubgroup, "H·A is not a subgroup");
  return Subgroup::from_members(h.parent(), product_set(h, a));
}

Subgroup zs_backward(const Subgroup& g, const Subgroup& h2) { return intersection(g, h2); }

ZSBijection zs_subgroup_bijection(const PermGroup& gamma, const Subgroup& g, const Subgroup& a) {
  if (!(g.parent() == gamma) || !(a.parent() == gamma) || !is_complement(gamma, g, a))
    fail(ErrorKind::NotZSProduct, "gamma is not the ZS-product of g and a");
  ZSBijection b;
  b.f_domain = f_domain(g, a);
  b.n_domain = overgroups(a);
  for (const Subgroup& h : b.f_domain) b.forward.push_back(position(b.n_domain, zs_forward(h, a)));
  for (const Subgroup& h2 : b.n_domain) b.backward.push_back(position(b.f_domain, zs_backward(g, h2)));
  return b;
}

CorrespondenceTable correspondence_table(const ExtensionModel& model, const Subgroup& complement) {
  require_complement(model, complement);
  CorrespondenceTable t{model, complement, {}};
  const Subgroup& a = model.gamma_e();
  for (const Subgroup& h : f_domain(complement, a)) {
    CorrespondenceRow r;
    r.h = h;
    r.field_subgroup = zs_forward(h, a);
    if (!(zs_backward(complement, r.field_subgroup) == h))
      fail(ErrorKind::InvalidInput, "correspondence roundtrip failed");
    r.subdegree = r.field_subgroup.order() / a.order();
    r.field_degree = model.gamma().order() / r.field_subgroup.order();
    t.rows.push_back(std::move(r));
  }
  return t;
}

DescentCertificate characteristic_descent(const ExtensionModel& model, const Subgroup& complement,
                                          const Subgroup& h) {
  require_complement(model, complement);
  if (!complement.is_normal())
    fail(ErrorKind::NotNormalComplement, "descent needs a normal complement (pre-Galois case)");
  if (!(h.parent() == model.gamma()) || !complement.contains(h))
    fail(ErrorKind::NotSubgroup, "h is not a subgroup of the complement");

  PermGroup cg = complement.as_group();
  std::vector<ElementIndex> inside;
  for (const Perm& x : h.elements()) inside.push_back(cg.index_of(x));
  std::sort(inside.begin(), inside.end());
  Subgroup hc = Subgroup::from_members(cg, inside);

  DescentCertificate c;
  auto aut = automorphism_group(cg);
  for (const IndexMap& alpha : aut.automorphisms)
    for (ElementIndex x : hc.members())
      if (!hc.contains(alpha[x])) fail(ErrorKind::NotCharacteristic, "h is not characteristic");
  c.automorphisms_checked = aut.order();
  c.field_subgroup = zs_forward(h, model.gamma_e());
  c.quotient = quotient(hc);
  return c;
}

CrossCorrespondence cross_correspondence(const ExtensionModel& model, const Subgroup& l_complement,
                                         const Subgroup& l2_complement) {
  require_complement(model, l_complement);
  require_complement(model, l2_complement);
  const Subgroup& a = model.gamma_e();
  const std::size_t n = model.gamma().order();
  CrossCorrespondence c;
  auto target = f_domain(l2_complement, a);
  std::vector<int> hit(target.size(), 0);
  c.index_preserving = true;
  for (const Subgroup& h : f_domain(l_complement, a)) {
    Subgroup img = zs_backward(l2_complement, zs_forward(h, a));
    hit[position(target, img)]++;
    c.index_preserving = c.index_preserving &&
                         l_complement.order() / h.order() == l2_complement.order() / img.order() &&
                         n / zs_forward(h, a).order() == l_complement.order() / h.order();
    c.pairs.emplace_back(h, std::move(img));
  }
  c.bijective = c.pairs.size() == target.size() &&
                std::all_of(hit.begin(), hit.end(), [](int x) { return x == 1; });
  return c;
}

}  // namespace pregal
