#include "pregal/geometric.hpp"

#include <algorithm>

#include "pregal/automorphisms.hpp"
#include "pregal/error.hpp"
#include "pregal/symmetric.hpp"

namespace pregal {

namespace {

// The block of points [offset, offset+deg) of p, as a permutation of degree deg.
Perm restrict_block(const Perm& p, std::size_t offset, std::size_t deg) {
  std::vector<Point> img(deg);
  for (std::size_t i = 0; i < deg; ++i) img[i] = static_cast<Point>(p[static_cast<Point>(offset + i)] - offset);
  return Perm(std::move(img));
}

}  // namespace

BranchCycleDescription::BranchCycleDescription(std::vector<Perm> tuple, std::vector<std::string> labels)
    : tuple_(std::move(tuple)), labels_(std::move(labels)) {
  if (tuple_.empty()) fail(ErrorKind::InvalidInput, "branch cycle description needs at least one entry");
  const std::size_t d = tuple_.front().degree();
  Perm prod(d);
  for (const Perm& g : tuple_) {
    if (g.degree() != d) fail(ErrorKind::DegreeMismatch, "tuple entries of different degrees");
    prod = prod * g;
  }
  if (!prod.is_identity()) fail(ErrorKind::InvalidInput, "g_1 ... g_r is not the identity");
  group_ = PermGroup::closure(d, tuple_);
  if (!is_transitive(group_)) fail(ErrorKind::InvalidInput, "monodromy group is not transitive");
  if (labels_.empty())
    for (std::size_t i = 0; i < tuple_.size(); ++i) labels_.push_back("t" + std::to_string(i + 1));
  if (labels_.size() != tuple_.size())
    fail(ErrorKind::InvalidInput, "one branch label per tuple entry");
}

BranchCycleDescription BranchCycleDescription::conjugated_by(const Perm& omega) const {
  std::vector<Perm> t;
  for (const Perm& g : tuple_) t.push_back(g.conjugated_by(omega));
  return BranchCycleDescription(std::move(t), labels_);
}

MonodromyReport monodromy_analysis(const BranchCycleDescription& bcd) {
  MonodromyReport r;
  r.group = bcd.group();
  r.is_geometrically_galois = r.group.order() == bcd.degree();  // transitive, so regular
  r.normalizer = symmetric_normalizer(r.group);
  r.constant_extension_bound = quotient(Subgroup::generated_by(r.normalizer, r.group.generators()));
  if (r.is_geometrically_galois) {
    auto aut = automorphism_group(r.group);
    r.bound_matches_aut = aut.order() == r.constant_extension_bound.order() &&
                          is_isomorphic(automorphisms_as_group(aut), r.constant_extension_bound);
  }
  return r;
}

void ArithmeticModel::validate() const {
  if (!(pibar.parent() == pi) || !pibar.is_normal())
    fail(ErrorKind::InvalidInput, "pibar must be a normal subgroup of pi");
  if (!(quotient_map.source() == pi) || !(quotient_map.target() == q) || !quotient_map.is_surjective() ||
      !(quotient_map.kernel() == pibar))
    fail(ErrorKind::InvalidInput, "quotient map must be pi -> q with kernel pibar");
  if (!(section.source() == q) || !(section.target() == pi))
    fail(ErrorKind::InvalidInput, "section must map q -> pi");
  for (ElementIndex t = 0; t < q.order(); ++t)
    if (quotient_map[section[t]] != t) fail(ErrorKind::InvalidInput, "section does not split the quotient map");
  if (!(phi.source() == pi)) fail(ErrorKind::InvalidInput, "phi must be defined on pi");
  std::vector<ElementIndex> img;
  for (ElementIndex x : pibar.members()) img.push_back(phi[x]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  if (img.size() != g().order()) fail(ErrorKind::InvalidInput, "phi restricted to pibar is not onto G");
  if (!(psi.source() == q) || !(psi.target() == g()))
    fail(ErrorKind::InvalidInput, "psi must map q -> G");
  if (rational_point)
    for (ElementIndex t = 0; t < q.order(); ++t)
      if (phi[section[t]] != 0) fail(ErrorKind::NoRationalPoint, "phi o section is not trivial");
}

ArithmeticModel twisting_model(const PermGroup& g, const PermGroup& q,
                               const std::vector<Perm>& psi_generator_images) {
  ArithmeticModel m;
  m.pi = direct_product(g, q);
  const std::size_t d = m.pi.degree();
  std::vector<Perm> gpart;
  for (const Perm& x : g.generators()) gpart.push_back(x.extended(d, 0));
  m.pibar = Subgroup::generated_by(m.pi, gpart);
  m.q = q;

  IndexMap to_q(m.pi.order()), to_g(m.pi.order());
  for (ElementIndex x = 0; x < m.pi.order(); ++x) {
    const Perm& p = m.pi.element(x);
    to_g[x] = g.index_of(restrict_block(p, 0, g.degree()));
    to_q[x] = q.index_of(restrict_block(p, g.degree(), q.degree()));
  }
  m.quotient_map = GroupHom::from_map(m.pi, q, std::move(to_q));
  m.phi = GroupHom::from_map(m.pi, g, std::move(to_g));
  std::vector<Perm> sec;
  for (const Perm& t : q.generators()) sec.push_back(t.extended(d, g.degree()));
  m.section = GroupHom::from_generator_images(q, m.pi, sec);
  m.psi = GroupHom::from_generator_images(q, g, psi_generator_images);
  m.rational_point = true;
  m.validate();
  return m;
}

TwistedRepresentation twist(const ArithmeticModel& model) {
  model.validate();
  if (!model.rational_point) fail(ErrorKind::NoRationalPoint, "twisting needs phi o section = 1");
  const PermGroup& g = model.g();
  if (!center(g).is_trivial()) fail(ErrorKind::CenterNotTrivial, "twisting needs Z(G) = 1");
  const PermGroup& pi = model.pi;
  const std::size_t n = g.order();

  TwistedRepresentation t;
  t.image.reserve(pi.order());
  for (ElementIndex y = 0; y < pi.order(); ++y) {
    ElementIndex tau = model.quotient_map[y];
    ElementIndex x = pi.multiply(y, pi.inverse(model.section[tau]));  // y = x·s(τ)
    ElementIndex left = model.phi[x];
    ElementIndex right = g.inverse(model.psi[tau]);
    std::vector<Point> img(n);
    for (ElementIndex e = 0; e < n; ++e) img[e] = g.multiply(g.multiply(left, e), right);
    t.image.emplace_back(std::move(img));
  }
  t.homomorphism_verified = true;
  for (ElementIndex a = 0; a < pi.order() && t.homomorphism_verified; ++a)
    for (ElementIndex b = 0; b < pi.order(); ++b)
      if (t.image[pi.multiply(a, b)] != t.image[a] * t.image[b]) {
        t.homomorphism_verified = false;
        break;
      }
  std::vector<ElementIndex> ker;
  for (ElementIndex y = 0; y < pi.order(); ++y)
    if (t.image[y].is_identity()) ker.push_back(y);
  t.kernel = Subgroup::from_members(pi, std::move(ker));
  t.image_group = PermGroup::closure(n, t.image);
  return t;
}

EtaleAlgebra specialize(const ArithmeticModel& model, bool use_twisted) {
  model.validate();
  const PermGroup& q = model.q;
  std::vector<Perm> act(q.order());
  if (use_twisted) {
    TwistedRepresentation t = twist(model);
    for (ElementIndex tau = 0; tau < q.order(); ++tau) act[tau] = t.image[model.section[tau]];
  } else {
    for (ElementIndex tau = 0; tau < q.order(); ++tau)
      act[tau] = model.g().element(model.phi[model.section[tau]]);
  }
  const std::size_t points = act.front().degree();

  EtaleAlgebra e;
  std::vector<char> seen(points, 0);
  for (Point p = 0; p < points; ++p) {
    if (seen[p]) continue;
    EtaleComponent c;
    std::vector<ElementIndex> stab;
    for (ElementIndex tau = 0; tau < q.order(); ++tau) {
      Point img = act[tau][p];
      if (img == p) stab.push_back(tau);
      if (!seen[img]) {
        seen[img] = 1;
        c.orbit.push_back(img);
      }
    }
    std::sort(c.orbit.begin(), c.orbit.end());
    c.degree = c.orbit.size();
    c.stabilizer = Subgroup::from_members(q, std::move(stab));
    e.total_degree += c.degree;
    e.components.push_back(std::move(c));
  }
  e.is_field = e.components.size() == 1;
  return e;
}

TransferReport specialization_transfer(const ExtensionModel& model, const Subgroup& complement) {
  if (!(complement.parent() == model.gamma()) ||
      !is_complement(model.gamma(), model.gamma_e(), complement))
    fail(ErrorKind::NotAComplement, "subgroup is not a complement of gamma_e");
  TransferReport r;
  r.complement = complement;
  r.factorization_holds = product_set(complement, model.gamma_e()).size() == model.gamma().order();
  r.pre_galois_transfer = complement.is_normal();
  r.restated = analyze(model);
  return r;
}

}  // namespace pregal
