#include "agt/io.hpp"

#include <fstream>
#include <stdexcept>

namespace agt {

namespace {

std::vector<Exps> readVectors(const json& arr, int nvars, const char* what) {
  if (!arr.is_array()) throw std::runtime_error(std::string(what) + " must be an array");
  std::vector<Exps> out;
  for (const auto& row : arr) {
    if (!row.is_array() || static_cast<int>(row.size()) != nvars)
      throw std::runtime_error(std::string(what) + " entries must have length vars");
    Exps e;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<int>() < 0)
        throw std::runtime_error(std::string(what) + " exponents must be non-negative integers");
      e.push_back(v.get<int>());
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

MonomialIdeal idealFromJson(const json& j) {
  if (!j.is_object() || !j.contains("vars"))
    throw std::runtime_error("ideal JSON must be an object with a \"vars\" field");
  int n = j.at("vars").get<int>();
  if (n < 1) throw std::runtime_error("\"vars\" must be at least 1");
  bool hasGens = j.contains("gens"), hasComps = j.contains("components");
  if (hasGens == hasComps)
    throw std::runtime_error("ideal JSON needs exactly one of \"gens\" or \"components\"");
  if (hasGens) {
    std::vector<Monomial> gens;
    for (auto& e : readVectors(j.at("gens"), n, "gens")) gens.push_back(Monomial(std::move(e)));
    if (gens.empty()) throw std::runtime_error("\"gens\" must be non-empty");
    return MonomialIdeal::make(n, std::move(gens));
  }
  std::vector<IrreducibleComponent> comps;
  for (auto& a : readVectors(j.at("components"), n, "components")) {
    for (int v : a)
      if (v < 1) throw std::runtime_error("component exponents must be at least 1");
    comps.push_back(IrreducibleComponent{std::move(a)});
  }
  if (comps.empty()) throw std::runtime_error("\"components\" must be non-empty");
  return intersectAll(n, comps);
}

MonomialIdeal idealFromString(const std::string& text) {
  return idealFromJson(json::parse(text));
}

MonomialIdeal idealFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return idealFromJson(j);
}

json idealToJson(const MonomialIdeal& I) {
  json j;
  j["vars"] = I.nvars();
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(g.e);
  j["gens"] = std::move(gens);
  return j;
}

}  // namespace agt
