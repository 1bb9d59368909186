#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pregal/catalog.hpp"
#include "pregal/cli/commands.hpp"
#include "pregal/cli/group_io.hpp"
#include "pregal/error.hpp"
#include "test_support.hpp"

using namespace pregal;
using namespace pregal::cli;
using namespace pregal::testing;

namespace {

const std::string data = PREGAL_TEST_DATA;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidInput;
}

struct Run {
  int status;
  std::string out;
};

Run tool(const std::string& args) {
  std::string cmd = std::string(PREGAL_TOOL) + " " + args + " 2>/dev/null";
  Run r{0, {}};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string tool_stderr(const std::string& args) {
  std::string cmd = std::string(PREGAL_TOOL) + " " + args + " 2>&1 >/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  pclose(p);
  return out;
}

Invocation inv(std::string cmd, std::map<std::string, std::vector<std::string>> o) { return {std::move(cmd), std::move(o)}; }

}  // namespace

TEST_CASE("parse group files") {
  PermGroup c3 = parse_group("degree 3\ngen (1 2 3)");
  CHECK(c3.order() == 3);
  CHECK(c3 == cyclic_group(3));

  PermGroup d8 = parse_group("degree 4\ngen (1 2 3 4)\ngen (1 3)");
  CHECK(d8.order() == 8);
  CHECK(raw_elements(d8) == naive_closure(4, {raw(Perm::from_cycles(4, {{0, 1, 2, 3}})), raw(Perm::from_cycles(4, {{0, 2}}))}));

  CHECK(kind_of([] { parse_group("degree 4\ngen (1 5)"); }) == ErrorKind::DegreeMismatch);

  auto spec = parse_group_spec(
      "# comment\n\n  degree 4   # trailing\ngen(1,2)(3 4)\nsubgroup k\n gen ()\ngen (1 3)(2 4)\nend\n");
  CHECK(spec.degree == 4);
  REQUIRE(spec.generators.size() == 1);
  CHECK(format_cycles(spec.generators[0]) == "(1 2)(3 4)");
  REQUIRE(spec.subgroups.size() == 1);
  CHECK(spec.subgroups[0].first == "k");
  CHECK(spec.subgroups[0].second.size() == 2);
  CHECK(spec.subgroups[0].second[0].is_identity());
  CHECK(parse_cycles("( 3 1 2 )", 3) == Perm::from_cycles(3, {{2, 0, 1}}));
  CHECK(format_cycles(Perm(5)) == "()");
}

TEST_CASE("parse errors carry line and column") {
  auto at = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_group_spec(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    FAIL("no ParseError");
    return {0, 0};
  };
  CHECK(at("gen (1 2)") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(at("degree 3\ngen (1 2") == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(at("degree 3\ngen (1 x)") == std::pair<std::size_t, std::size_t>{2, 8});
  CHECK(at("degree 3\n\ngen (1 2 1)") == std::pair<std::size_t, std::size_t>{3, 11});
  CHECK(at("degree 3\nfoo (1 2)").first == 2);
  CHECK(at("degree 3\nsubgroup a\ngen (1 2)\n").first == 2);  // unclosed block
  CHECK(at("degree 3\nend").first == 2);
  CHECK(at("").first == 1);
  CHECK(at("degree 3\ndegree 3").first == 2);
}

TEST_CASE("property: serialize / parse round trip over the catalog") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    PermGroup g = catalog_group(name);
    Perm first = g.generators().empty() ? Perm(g.degree()) : g.generators().front();
    std::vector<std::pair<std::string, std::vector<Perm>>> subs = {{"first", {first}}};
    std::string text = serialize_group(g, subs);
    GroupSpec s = parse_group_spec(text);
    PermGroup back = PermGroup::closure(s.degree, s.generators);
    CHECK(back == g);
    CHECK(back.generators() == g.generators());
    CHECK(s.subgroups == subs);
    CHECK(serialize_group(back, s.subgroups) == text);
  }
}

TEST_CASE("reports") {
  auto r = run(inv("analyze", {{"gamma", {data + "/s4.grp"}}, {"stab", {"4"}}}));
  CHECK(r["result"]["potential_groups"] == nlohmann::json::array({"V4", "C4"}));
  CHECK(r["result"]["pre_galois_groups"] == nlohmann::json::array({"V4"}));
  CHECK(r["schema_version"] == schema_version);
  CHECK(r["command"] == "analyze");
  CHECK(r["bounds"]["max_elements"] == 10000);

  auto a4 = run(inv("analyze", {{"gamma", {data + "/a4.grp"}}, {"subgroup", {"c2"}}}));
  CHECK(a4["result"]["is_potentially_galois"] == false);

  auto d8 = run(inv("complements", {{"gamma", {data + "/d8.grp"}}, {"subgroup", {"refl"}}, {"normal", {"true"}}}));
  CHECK(d8["result"]["count"] == 2);

  // digest: FNV-1a of name, NUL, content, NUL
  std::ifstream in(data + "/s4.grp", std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(r["input_digest"] == fnv1a_hex(std::string("gamma") + '\0' + ss.str() + '\0'));
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");

  auto cat = run(inv("catalog", {{"name", {"S4"}}}));
  CHECK(parse_group(cat["result"]["text"].get<std::string>()) == symmetric_group(4));

  auto rig = run(inv("rigidity", {{"group", {"catalog:A5"}}, {"classes", {"2A,3A,5A"}}, {"embedding", {"regular"}}}));
  CHECK(rig["result"]["tuple_count"] == 60);
  CHECK(rig["result"]["conclusion_degree_bounds"]["aut_bound"] == 120);
  CHECK(rig["result"]["conclusion_degree_bounds"]["out_bound"] == 2);
  auto lifted = run(inv("rigidity", {{"group", {"catalog:A5"}}, {"classes", {"2A,3A,5A"}}, {"exponents", {"2"}},
                                     {"modulus", {"5"}}}));
  CHECK(lifted["result"]["exponents"] == nlohmann::json::array({7}));
  CHECK(lifted["result"]["rationality"]["rational"] == false);
  CHECK(lifted["result"]["rationality"]["weakly_rational"] == true);

  auto sp = run(inv("specialize", {{"g", {"catalog:S3"}}, {"q", {"catalog:C2"}}, {"psi", {"(1 2)"}}}));
  CHECK(sp["result"]["component_count"] == 3);

  CHECK(kind_of([&] { run(inv("nonsense", {})); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { run(inv("analyze", {{"gamma", {data + "/missing.grp"}}, {"stab", {"1"}}})); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([&] { run(inv("analyze", {{"gamma", {"catalog:S4"}}, {"stab", {"9"}}})); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("property: report determinism") {
  std::vector<Invocation> all = {
      inv("analyze", {{"gamma", {data + "/s4.grp"}}, {"stab", {"4"}}}),
      inv("hopf", {{"gamma", {data + "/d8.grp"}}, {"subgroup", {"refl"}}}),
      inv("correspondence", {{"gamma", {"catalog:S4"}}, {"stab", {"4"}}}),
      inv("twist", {{"g", {"catalog:S3"}}, {"q", {"catalog:C2"}}, {"psi", {"(1 2)"}}}),
      inv("moduli", {{"group", {"catalog:A6"}}}),
  };
  for (const auto& i : all) {
    CAPTURE(i.command);
    CHECK(render(run(i)) == render(run(i)));
  }
}

TEST_CASE("tool exit codes") {
  Run ok = tool("analyze --gamma " + data + "/s4.grp --stab 4");
  CHECK(ok.status == 0);
  CHECK(nlohmann::json::parse(ok.out)["result"]["is_pre_galois"] == true);

  CHECK(tool("analyze --gamma " + data + "/missing.grp --stab 1").status == 2);
  CHECK(tool("rigidity --group catalog:A5 --classes 2A,3A,5A --exponents 2").status == 2);  // BadExponent
  CHECK(tool("analyze --gamma catalog:S4").status == 2);
  CHECK(tool("frobnicate").status == 2);
  CHECK(tool("").status == 2);

  auto err = nlohmann::json::parse(tool_stderr("rigidity --group catalog:S3 --classes 2A,2A"));
  CHECK(err["error"]["kind"] == "EmptyTupleSet");

  std::string bad = (std::filesystem::temp_directory_path() / "pregal_bad_syntax.grp").string();
  {
    std::ofstream out(bad);
    out << "degree 3\ngen (1 2\n";
  }
  auto perr = nlohmann::json::parse(tool_stderr("analyze --gamma " + bad + " --stab 1"));
  CHECK(perr["error"]["kind"] == "ParseError");
  CHECK(perr["error"]["line"] == 2);
  CHECK(tool("analyze --gamma " + bad + " --stab 1").status == 2);
  std::remove(bad.c_str());

  // element bound through the environment: S6 does not fit in 100 elements
  Run big = tool("moduli --group catalog:S6");
  CHECK(big.status == 0);
  std::string env = "PREGAL_MAX_ELEMENTS=100 ";
  std::string cmd = env + PREGAL_TOOL + std::string(" moduli --group catalog:S6 >/dev/null 2>&1");
  int st = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(st) == 3);
}
