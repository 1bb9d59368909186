#pragma once

// Extension models shared by the unit tests and the acceptance binary.

#include <string>
#include <vector>

#include "pregal/catalog.hpp"
#include "pregal/extension.hpp"
#include "pregal/subgroups.hpp"

namespace pregal::testing {

struct NamedModel {
  std::string name;
  ExtensionModel model;
};

inline Perm cyc(std::size_t d, std::vector<std::vector<Point>> c) { return Perm::from_cycles(d, c); }

inline Subgroup sub(const PermGroup& g, std::vector<Perm> gens) {
  return Subgroup::generated_by(g, gens);
}

inline ExtensionModel natural(const char* name) {
  return ExtensionModel::from_stabilizer(catalog_group(name), 0);
}

inline ExtensionModel on_cosets(const PermGroup& g, std::vector<Perm> gens) {
  return ExtensionModel::from_quotient(g, sub(g, std::move(gens)));
}

/// Models with |Γ| <= 200.
inline std::vector<NamedModel> small_models() {
  std::vector<NamedModel> out;
  for (const char* n : {"S3", "S4", "A4", "D8", "D10", "D12", "F20", "A5", "S5", "C5", "C6"})
    out.push_back({std::string(n) + " natural", natural(n)});
  for (const char* n : {"C4", "V4", "S3", "Q8", "D8", "A4"})
    out.push_back({std::string("reg:") + n + " (Galois)", natural((std::string("reg:") + n).c_str())});

  PermGroup s4 = catalog_group("S4");
  out.push_back({"S4 on cosets of C4", on_cosets(s4, {cyc(4, {{0, 1, 2, 3}})})});
  out.push_back({"S4 on cosets of C3", on_cosets(s4, {cyc(4, {{0, 1, 2}})})});
  out.push_back({"S4 on cosets of C2", on_cosets(s4, {cyc(4, {{0, 1}})})});
  PermGroup a4 = catalog_group("A4");
  out.push_back({"A4 on cosets of <(0 1)(2 3)>", on_cosets(a4, {cyc(4, {{0, 1}, {2, 3}})})});
  out.push_back({"A4 on cosets of C3", on_cosets(a4, {cyc(4, {{0, 1, 2}})})});
  PermGroup a5 = catalog_group("A5");
  out.push_back({"A5 on cosets of D10", on_cosets(a5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})})});
  out.push_back({"A5 on cosets of <(0 1)(2 3)>", on_cosets(a5, {cyc(5, {{0, 1}, {2, 3}})})});
  PermGroup s5 = catalog_group("S5");
  out.push_back({"S5 on cosets of F20", on_cosets(s5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})})});
  PermGroup d8 = catalog_group("D8");
  out.push_back({"D8 on cosets of <(0 1)(2 3)>", on_cosets(d8, {cyc(4, {{0, 1}, {2, 3}})})});
  PermGroup s3c2 = catalog_group("S3xC2");
  out.push_back({"S3xC2 on cosets of a transposition", on_cosets(s3c2, {cyc(5, {{0, 1}})})});
  return out;
}

}  // namespace pregal::testing
