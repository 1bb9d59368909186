#include <algorithm>
#include <map>

#include "pregal/automorphisms.hpp"
#include "pregal/error.hpp"
#include "pregal/geometric.hpp"
#include "pregal/symmetric.hpp"

namespace pregal {

PermGroup compositum_image(const PermGroup& pi, const std::vector<GroupHom>& phis) {
  if (phis.empty()) fail(ErrorKind::InvalidInput, "compositum needs at least one map");
  std::size_t deg = 0;
  for (const GroupHom& f : phis) {
    if (!(f.source() == pi)) fail(ErrorKind::InvalidInput, "maps must be defined on pi");
    if (!f.is_surjective()) fail(ErrorKind::NotSurjective, "compositum factors must be surjective");
    deg += f.target().degree();
  }
  if (phis.size() == 1) return phis.front().target();
  std::vector<Perm> gens;
  for (const Perm& x : pi.generators()) {
    Perm p(deg);
    std::size_t offset = 0;
    for (const GroupHom& f : phis) {
      p = p * f(x).extended(deg, offset);
      offset += f.target().degree();
    }
    gens.push_back(std::move(p));
  }
  return PermGroup::closure(deg, std::move(gens));
}

PowerCertificate power_of_simple(const PermGroup& pi, const std::vector<GroupHom>& phis) {
  if (phis.empty()) fail(ErrorKind::InvalidInput, "need at least one map");
  const PermGroup& g0 = phis.front().target();
  if (g0.is_abelian() || !is_simple(g0)) fail(ErrorKind::NotSimple, "target is not nonabelian simple");
  for (const GroupHom& f : phis)
    if (!is_isomorphic(f.target(), g0)) fail(ErrorKind::NotSimple, "targets are not copies of one group");

  PowerCertificate c;
  c.simple_order = g0.order();
  std::vector<Subgroup> kernels;
  std::vector<GroupHom> family;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (!phis[i].is_surjective()) fail(ErrorKind::NotSurjective, "map is not surjective");
    Subgroup k = phis[i].kernel();
    if (std::find(kernels.begin(), kernels.end(), k) != kernels.end()) continue;
    kernels.push_back(k);
    family.push_back(phis[i]);
    c.distinct.push_back(i);
  }
  c.n = kernels.size();
  c.image = compositum_image(pi, family);
  std::size_t full = 1;
  for (std::size_t i = 0; i < c.n; ++i) full *= g0.order();
  c.full_product = c.image.order() == full;
  return c;
}

NorGCen nor_gcen_out(const PermGroup& g) {
  NorGCen r;
  r.normalizer = symmetric_normalizer(g);
  const PermGroup& nor = r.normalizer;
  r.centralizer = centralizer(nor, g.generators());
  Subgroup gsub = Subgroup::generated_by(nor, g.generators());
  r.g_cen = join(gsub, r.centralizer);

  CosetAction by_cen = coset_action(r.centralizer);
  r.nor_mod_cen = by_cen.image;
  r.mod_cen_of.resize(nor.order());
  for (ElementIndex x = 0; x < nor.order(); ++x) r.mod_cen_of[x] = r.nor_mod_cen.index_of(by_cen.action[x]);
  std::vector<ElementIndex> gc;
  for (ElementIndex x : r.g_cen.members()) gc.push_back(r.mod_cen_of[x]);
  std::sort(gc.begin(), gc.end());
  gc.erase(std::unique(gc.begin(), gc.end()), gc.end());
  r.g_cen_image = Subgroup::from_members(r.nor_mod_cen, std::move(gc));

  CosetAction by_gcen = coset_action(r.g_cen);
  r.quotient = by_gcen.image;
  r.quotient_of.resize(nor.order());
  for (ElementIndex x = 0; x < nor.order(); ++x) r.quotient_of[x] = r.quotient.index_of(by_gcen.action[x]);

  // [n] -> class of conjugation by n in Out(G), on coset representatives;
  // well-definedness is checked against the generators of G·Cen.
  auto key = [&](const Perm& n) { return outer_class_key(g, induced_automorphism(g, n)); };
  r.out_classes.assign(r.quotient.order(), {});
  std::vector<char> done(r.quotient.order(), 0);
  bool well_defined = true;
  for (ElementIndex x = 0; x < nor.order(); ++x) {
    ElementIndex c = r.quotient_of[x];
    if (done[c]) continue;
    done[c] = 1;
    r.out_classes[c] = key(nor.element(x));
    for (ElementIndex m : r.g_cen.generators())
      well_defined = well_defined && key(nor.element(x) * nor.element(m)) == r.out_classes[c];
  }
  std::vector<IndexMap> sorted = r.out_classes;
  std::sort(sorted.begin(), sorted.end());
  r.injective = well_defined && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  r.out_order = outer_order(g);
  return r;
}

FieldOfModuliGroup field_of_moduli_group(const PermGroup& q, const std::vector<Perm>& rep_generator_images,
                                         const PermGroup& g) {
  NorGCen ngc = nor_gcen_out(g);
  std::vector<Perm> mod_cen;
  for (const Perm& p : rep_generator_images) {
    auto idx = ngc.normalizer.find(p);
    if (!idx) fail(ErrorKind::NotAHomomorphism, "image " + p.to_string() + " does not normalize G");
    mod_cen.push_back(ngc.nor_mod_cen.element(ngc.mod_cen_of[*idx]));
  }
  GroupHom rep = GroupHom::from_generator_images(q, ngc.nor_mod_cen, mod_cen);

  // Nor/Cen -> Nor/(G·Cen), through any lift
  std::vector<ElementIndex> down(ngc.nor_mod_cen.order(), 0);
  for (ElementIndex x = 0; x < ngc.normalizer.order(); ++x) down[ngc.mod_cen_of[x]] = ngc.quotient_of[x];

  FieldOfModuliGroup f;
  std::vector<ElementIndex> hm;
  for (ElementIndex t = 0; t < q.order(); ++t)
    if (ngc.g_cen_image.contains(rep[t])) hm.push_back(t);
  f.h = Subgroup::from_members(q, std::move(hm));
  CosetAction cosets = coset_action(f.h);
  f.q_mod_h = cosets.image;
  f.embedding.assign(f.q_mod_h.order(), 0);
  for (ElementIndex t = 0; t < q.order(); ++t)
    f.embedding[f.q_mod_h.index_of(cosets.action[t])] = down[rep[t]];
  std::vector<ElementIndex> e = f.embedding;
  std::sort(e.begin(), e.end());
  f.injective = std::adjacent_find(e.begin(), e.end()) == e.end();
  f.target_order = ngc.quotient.order();
  return f;
}

}  // namespace pregal
