#include "pregal/cli/commands.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "pregal/bounds.hpp"
#include "pregal/catalog.hpp"
#include "pregal/cli/group_io.hpp"
#include "pregal/correspondence.hpp"
#include "pregal/extension.hpp"
#include "pregal/geometric.hpp"
#include "pregal/rigidity.hpp"

namespace pregal::cli {

using nlohmann::json;

namespace {

constexpr std::string_view catalog_prefix = "catalog:";

// --- option access ----------------------------------------------------------

const std::vector<std::string>* values(const Invocation& inv, const std::string& name) {
  auto it = inv.options.find(name);
  return it == inv.options.end() || it->second.empty() ? nullptr : &it->second;
}

std::optional<std::string> maybe(const Invocation& inv, const std::string& name) {
  auto v = values(inv, name);
  return v ? std::optional<std::string>(v->front()) : std::nullopt;
}

std::string one(const Invocation& inv, const std::string& name) {
  auto v = maybe(inv, name);
  if (!v) fail(ErrorKind::InvalidInput, "missing --" + name);
  return *v;
}

std::vector<std::string> many(const Invocation& inv, const std::string& name) {
  auto v = values(inv, name);
  return v ? *v : std::vector<std::string>{};
}

bool flag(const Invocation& inv, const std::string& name) { return values(inv, name) != nullptr; }

long long integer(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) fail(ErrorKind::InvalidInput, what + ": not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// --- inputs -----------------------------------------------------------------

struct Input {
  PermGroup group;
  GroupSpec spec;  // named subgroups; empty for catalog groups
};

std::string read_source(const std::string& source) {
  if (source.starts_with(catalog_prefix)) return source;
  std::ifstream in(source, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read " + source);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input load(const std::string& source) {
  if (source.starts_with(catalog_prefix)) {
    Input in{catalog_group(source.substr(catalog_prefix.size())), {}};
    in.spec.degree = in.group.degree();
    return in;
  }
  Input in;
  in.spec = parse_group_spec(read_source(source));
  in.group = PermGroup::closure(in.spec.degree, in.spec.generators);
  return in;
}

Subgroup named_subgroup(const Input& in, const std::string& name) {
  for (const auto& [n, gens] : in.spec.subgroups)
    if (n == name) {
      for (const Perm& p : gens)
        if (!in.group.contains(p)) fail(ErrorKind::NotSubgroup, "subgroup " + name + " is not inside the group");
      return Subgroup::generated_by(in.group, gens);
    }
  fail(ErrorKind::InvalidInput, "no subgroup block named " + name);
}

ExtensionModel model_from(const Invocation& inv, const Input& in) {
  if (auto stab = maybe(inv, "stab")) {
    long long p = integer(*stab, "--stab");
    if (p < 1 || static_cast<std::size_t>(p) > in.group.degree())
      fail(ErrorKind::DegreeMismatch, "--stab point outside 1.." + std::to_string(in.group.degree()));
    return ExtensionModel::from_stabilizer(in.group, static_cast<Point>(p - 1));
  }
  if (auto name = maybe(inv, "subgroup")) {
    Subgroup e = named_subgroup(in, *name);
    if (flag(inv, "core-quotient")) return ExtensionModel::from_quotient(in.group, e);
    return ExtensionModel(in.group, e);
  }
  fail(ErrorKind::InvalidInput, "give --stab POINT or --subgroup NAME");
}

std::vector<Perm> perms(const std::vector<std::string>& texts, std::size_t degree) {
  std::vector<Perm> out;
  for (const auto& t : texts) out.push_back(parse_cycles(t, degree));
  return out;
}

// --- json shapes ------------------------------------------------------------

std::string type_of(const PermGroup& g) {
  try {
    return identify(g);
  } catch (const Error&) {  // above the isomorphism-search bound
    return "order" + std::to_string(g.order());
  }
}

json cycles(const std::vector<Perm>& ps) {
  json a = json::array();
  for (const Perm& p : ps) a.push_back(format_cycles(p));
  return a;
}

json group_json(const PermGroup& g) {
  return {{"degree", g.degree()}, {"order", g.order()}, {"type", type_of(g)}, {"generators", cycles(g.generators())}};
}

json subgroup_json(const Subgroup& s) {
  std::vector<Perm> gens;
  for (ElementIndex i : s.generators()) gens.push_back(s.parent().element(i));
  return {{"order", s.order()},
          {"index", s.index()},
          {"normal", s.is_normal()},
          {"type", type_of(s.as_group())},
          {"generators", cycles(gens)}};
}

json subgroups_json(const std::vector<Subgroup>& v) {
  json a = json::array();
  for (const Subgroup& s : v) a.push_back(subgroup_json(s));
  return a;
}

json classes_json(const std::vector<GroupClass>& v) {
  json a = json::array();
  for (const GroupClass& c : v) a.push_back(c.name);
  return a;
}

// --- commands ---------------------------------------------------------------

json cmd_analyze(const Invocation& inv) {
  Input in = load(one(inv, "gamma"));
  ExtensionModel m = model_from(inv, in);
  PreGaloisReport r = analyze(m);
  json classes = json::array();
  for (const GroupClass& c : r.potential_groups)
    classes.push_back({{"name", c.name}, {"count", c.count}, {"representative", subgroup_json(c.representative)}});
  return {{"gamma", group_json(m.gamma())},
          {"gamma_e", subgroup_json(m.gamma_e())},
          {"degree", m.degree()},
          {"is_galois", m.gamma_e().is_trivial()},
          {"complements", subgroups_json(r.complements)},
          {"normal_complements", subgroups_json(r.normal_complements)},
          {"potential_groups", classes_json(r.potential_groups)},
          {"potential_group_classes", classes},
          {"pre_galois_groups", classes_json(r.pre_galois_groups)},
          {"is_potentially_galois", r.is_potentially_galois},
          {"is_pre_galois", r.is_pre_galois}};
}

json cmd_complements(const Invocation& inv) {
  Input in = load(one(inv, "gamma"));
  ExtensionModel m = model_from(inv, in);
  bool normal = flag(inv, "normal");
  auto v = normal ? normal_complements(m.gamma(), m.gamma_e()) : complements(m.gamma(), m.gamma_e());
  return {{"normal_only", normal}, {"count", v.size()}, {"complements", subgroups_json(v)}};
}

json cmd_correspondence(const Invocation& inv) {
  Input in = load(one(inv, "gamma"));
  ExtensionModel m = model_from(inv, in);
  Subgroup g;
  if (auto name = maybe(inv, "complement")) {
    g = named_subgroup(in, *name);
  } else {
    auto all = complements(m.gamma(), m.gamma_e());
    long long k = maybe(inv, "complement-index") ? integer(one(inv, "complement-index"), "--complement-index") : 0;
    if (k < 0 || static_cast<std::size_t>(k) >= all.size())
      fail(ErrorKind::NotAComplement, "complement index " + std::to_string(k) + " out of range (" +
                                          std::to_string(all.size()) + " complements)");
    g = all[static_cast<std::size_t>(k)];
  }
  CorrespondenceTable t = correspondence_table(m, g);
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"h", subgroup_json(r.h)},
                    {"field_subgroup", subgroup_json(r.field_subgroup)},
                    {"subdegree", r.subdegree},
                    {"field_degree", r.field_degree}});
  return {{"complement", subgroup_json(t.complement)}, {"rows", rows}};
}

json cmd_hopf(const Invocation& inv) {
  Input in = load(one(inv, "gamma"));
  ExtensionModel m = model_from(inv, in);
  HopfResult h = hopf_regular_subgroups(m);
  json structures = json::array();
  bool witness = false;
  for (const auto& s : h.structures) {
    structures.push_back({{"type", s.type}, {"inside_gamma", s.inside_gamma}, {"generators", cycles(s.n.generators())}});
    witness = witness || s.inside_gamma;
  }
  return {{"lambda", group_json(h.lambda)},
          {"structures", structures},
          {"count", h.structures.size()},
          {"almost_classically_galois", witness},
          {"is_pre_galois", analyze(m).is_pre_galois}};
}

ArithmeticModel twisting_from(const Invocation& inv) {
  Input g = load(one(inv, "g"));
  Input q = load(one(inv, "q"));
  auto psi = perms(many(inv, "psi"), g.group.degree());
  if (psi.size() != q.group.generators().size())
    fail(ErrorKind::InvalidInput, "give one --psi per generator of q (" + std::to_string(q.group.generators().size()) +
                                      ")");
  return twisting_model(g.group, q.group, psi);
}

json cmd_twist(const Invocation& inv) {
  ArithmeticModel m = twisting_from(inv);
  TwistedRepresentation t = twist(m);
  std::size_t ker_phi = 0;
  for (ElementIndex y = 0; y < m.pi.order(); ++y) ker_phi += m.phi[y] == 0 && m.psi[m.quotient_map[y]] == 0;
  return {{"pi_order", m.pi.order()},
          {"g", group_json(m.g())},
          {"q_order", m.q.order()},
          {"psi_image_order", m.psi.image().order()},
          {"homomorphism_verified", t.homomorphism_verified},
          {"image_order", t.image_group.order()},
          {"kernel_order", t.kernel.order()},
          {"kernel_identity_holds", ker_phi == t.kernel.order()}};
}

json cmd_specialize(const Invocation& inv) {
  ArithmeticModel m = twisting_from(inv);
  bool twisted = !flag(inv, "untwisted");
  EtaleAlgebra e = specialize(m, twisted);
  json comps = json::array();
  for (const auto& c : e.components) {
    json o = json::array();
    for (Point p : c.orbit) {
      if (twisted) o.push_back(format_cycles(m.g().element(p)));
      else o.push_back(p + 1);
    }
    comps.push_back({{"degree", c.degree}, {"stabilizer_order", c.stabilizer.order()}, {"orbit", o}});
  }
  return {{"twisted", twisted},
          {"components", comps},
          {"component_count", e.components.size()},
          {"total_degree", e.total_degree},
          {"is_field", e.is_field}};
}

json cmd_moduli(const Invocation& inv) {
  Input g = load(one(inv, "group"));
  NorGCen n = nor_gcen_out(g.group);
  json r = {{"group", group_json(g.group)},
            {"normalizer_order", n.normalizer.order()},
            {"centralizer_order", n.centralizer.order()},
            {"g_cen_order", n.g_cen.order()},
            {"nor_mod_g_cen_order", n.quotient.order()},
            {"out_order", n.out_order},
            {"injective_into_out", n.injective}};
  if (auto qs = maybe(inv, "q")) {
    Input q = load(*qs);
    auto rep = perms(many(inv, "rep"), g.group.degree());
    if (rep.size() != q.group.generators().size())
      fail(ErrorKind::InvalidInput, "give one --rep per generator of q");
    FieldOfModuliGroup f = field_of_moduli_group(q.group, rep, g.group);
    r["field_of_moduli"] = {{"h", subgroup_json(f.h)},
                            {"q_mod_h_order", f.q_mod_h.order()},
                            {"embedding", f.embedding},
                            {"target_order", f.target_order},
                            {"injective", f.injective}};
  }
  return r;
}

json cmd_rigidity(const Invocation& inv) {
  Input g = load(one(inv, "group"));
  ClassTuple ct = class_tuple(g.group, split(one(inv, "classes"), ','));
  std::string emb = maybe(inv, "embedding").value_or("natural");
  if (emb != "natural" && emb != "regular") fail(ErrorKind::InvalidInput, "--embedding is natural or regular");
  Embedding e = emb == "regular" ? Embedding::Regular : Embedding::Natural;

  std::string ex = maybe(inv, "exponents").value_or("all");
  std::vector<long long> exps;
  std::string convention = "integers coprime to exp(G)";
  if (ex == "all") {
    exps = unit_exponents(g.group);
  } else {
    for (const auto& s : split(ex, ',')) exps.push_back(integer(s, "--exponents"));
  }
  if (auto mod = maybe(inv, "modulus")) {
    long long d = integer(*mod, "--modulus");
    if (d < 1) fail(ErrorKind::BadExponent, "--modulus must be positive");
    for (long long& m : exps) m = lift_unit_exponent(g.group, m, static_cast<std::size_t>(d));
    convention = "units mod " + *mod + " lifted to integers coprime to exp(G)";
  }
  RigidityCertificate c = rigidity_pipeline(ct, e, exps, flag(inv, "split"));

  json rat = nullptr;
  if (c.rationality) {
    json per = json::array();
    for (const auto& w : c.rationality->exponents) per.push_back({{"m", w.m}, {"weak", w.weak}, {"plain", w.plain}});
    rat = {{"weakly_rational", c.rationality->weakly_rational},
           {"rational", c.rationality->rational},
           {"exponents", per}};
  }
  json action = json::array();
  for (const auto& r : c.action.records) {
    json perm = json::array();
    for (std::size_t i : r.branch_perm) perm.push_back(i + 1);
    action.push_back({{"branch_perm", perm}, {"chi", r.chi}});
  }
  return {{"classes", c.classes},
          {"embedding", emb},
          {"exponents", exps},
          {"exponent_convention", convention},
          {"tuple_count", c.tuple_count},
          {"orbit_count_under_normalizer", c.orbit_count_under_normalizer},
          {"inner_orbit_count", c.inner_orbit_count},
          {"is_weakly_rigid", c.is_weakly_rigid},
          {"is_rigid", c.is_rigid},
          {"rationality", rat},
          {"action", action},
          {"weakly_k_rational", c.k_rationality.weakly_k_rational},
          {"k_rational", c.k_rationality.k_rational},
          {"conclusion_degree_bounds", {{"aut_bound", c.aut_bound}, {"nor_bound", c.nor_bound}, {"out_bound", c.out_bound}}},
          {"split_hypothesis", c.split_hypothesis},
          {"center_split", c.center_split},
          {"conclusions", c.conclusions},
          {"note", "cover existence is not claimed; conclusions follow from the verified premises"}};
}

json cmd_catalog(const Invocation& inv) {
  if (auto name = maybe(inv, "name")) {
    PermGroup g = catalog_group(*name);
    return {{"name", *name}, {"group", group_json(g)}, {"text", serialize_group(g)}};
  }
  json a = json::array();
  for (const auto& n : catalog_names()) {
    PermGroup g = catalog_group(n);
    a.push_back({{"name", n}, {"degree", g.degree()}, {"order", g.order()}});
  }
  return {{"groups", a}};
}

using Handler = json (*)(const Invocation&);
const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"analyze", cmd_analyze},   {"complements", cmd_complements}, {"correspondence", cmd_correspondence},
      {"hopf", cmd_hopf},         {"twist", cmd_twist},             {"specialize", cmd_specialize},
      {"moduli", cmd_moduli},     {"rigidity", cmd_rigidity},       {"catalog", cmd_catalog}};
  return h;
}

const std::vector<std::string> input_options = {"g", "gamma", "group", "q"};

}  // namespace

const std::vector<CommandSpec>& command_specs() {
  using K = OptionSpec::Kind;
  static const OptionSpec gamma{"gamma", "group file or catalog:NAME", K::Single, true};
  static const std::vector<OptionSpec> model = {
      gamma,
      {"stab", "Γ_E = stabilizer of this point (1-based)"},
      {"subgroup", "Γ_E = named subgroup block of the group file"},
      {"core-quotient", "quotient Γ by the core of Γ_E instead of rejecting", K::Flag}};
  auto with = [](std::vector<OptionSpec> base, std::vector<OptionSpec> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
  };
  static const std::vector<OptionSpec> twisting = {
      {"g", "group G (file or catalog:NAME)", K::Single, true},
      {"q", "finite Galois quotient Q", K::Single, true},
      {"psi", "image of each generator of Q in G, cycle notation", K::Multi}};
  static const std::vector<CommandSpec> specs = {
      {"analyze", "complements, potential and pre-Galois groups", model},
      {"complements", "complements of Γ_E in Γ", with(model, {{"normal", "normal complements only", K::Flag}})},
      {"correspondence", "subgroup/field correspondence for a complement",
       with(model, {{"complement", "named subgroup block used as complement"},
                    {"complement-index", "index into the complement list (default 0)"}})},
      {"hopf", "regular subgroups normalized by λ(Γ)", model},
      {"twist", "twisted representation of G × Q", twisting},
      {"specialize", "orbit decomposition of a specialization",
       with(twisting, {{"untwisted", "use φ∘s instead of the twisted map", K::Flag}})},
      {"moduli", "Nor/(G·Cen), Out(G) and the field-of-moduli group",
       {{"group", "group G ≤ S_d", K::Single, true},
        {"q", "finite Galois quotient Q"},
        {"rep", "lift in Nor of the image of each generator of Q", K::Multi}}},
      {"rigidity", "weak rigidity and rationality certificate",
       {{"group", "group G", K::Single, true},
        {"classes", "class names, e.g. 2A,3A,5A", K::Single, true},
        {"embedding", "natural or regular (default natural)"},
        {"exponents", "all, or a comma-separated list (default all)"},
        {"modulus", "treat exponents as residues mod d"},
        {"split", "assume 1 -> Z(G) -> G -> Inn(G) -> 1 splits or cd(k) <= 1", K::Flag}}},
      {"catalog", "built-in groups", {{"name", "show one group"}}}};
  return specs;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
  return out;
}

json run(const Invocation& inv) {
  auto it = handlers().find(inv.command);
  if (it == handlers().end()) fail(ErrorKind::InvalidInput, "unknown command " + inv.command);

  std::string digest_input;
  for (const auto& name : input_options)
    if (auto v = maybe(inv, name)) digest_input += name + '\0' + read_source(*v) + '\0';

  json args = json::object();
  for (const auto& [k, v] : inv.options) {
    if (v.size() == 1) args[k] = v.front();
    else args[k] = v;
  }
  const Bounds& b = bounds();
  json report = {{"schema_version", schema_version},
                 {"toolkit_version", std::string(toolkit_version)},
                 {"command", inv.command},
                 {"arguments", args},
                 {"input_digest", fnv1a_hex(digest_input)},
                 {"bounds",
                  {{"max_elements", b.max_elements},
                   {"max_subgroup_order", b.max_subgroup_order},
                   {"max_automorphism_order", b.max_automorphism_order},
                   {"max_regular_degree", b.max_regular_degree},
                   {"max_symmetric_degree", b.max_symmetric_degree},
                   {"max_tuple_space", b.max_tuple_space}}}};
  report["result"] = it->second(inv);
  return report;
}

json error_report(const Error& e) {
  json err = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (auto p = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = p->line();
    err["column"] = p->column();
  }
  return {{"error", err}};
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::BoundExceeded ? 3 : 2; }

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace pregal::cli
