#pragma once

// JSON and DOT renderings. Monomials serialize as exponent arrays padded
// to the poset's number of variables; filters as {"elements": [...]};
// Hasse diagrams as vertex/label/cover arrays.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "filters.hpp"
#include "monomial.hpp"
#include "poset.hpp"

namespace borel {

using json = nlohmann::json;

inline json to_json(const Monomial& m, int nvars) { return json(m.exponents(std::max(nvars, m.max_supp()))); }

inline Monomial monomial_from_json(const json& j) {
  if (j.is_string()) return parse_monomial(j.get<std::string>());
  if (!j.is_array()) throw parse_error("monomial must be an exponent array or a string");
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 0) throw parse_error("exponents must be non-negative integers");
    e.push_back(x.get<int>());
  }
  return Monomial(std::move(e));
}

inline json filter_to_json(const MonomialSet& F, int nvars) {
  json elems = json::array();
  for (const auto& m : F) elems.push_back(to_json(m, nvars));
  return json{{"elements", elems}};
}

inline MonomialSet filter_from_json(const json& j) {
  const json& elems = j.is_object() ? j.at("elements") : j;
  if (!elems.is_array()) throw parse_error("filter must be {\"elements\": [...]} or an array");
  MonomialSet F;
  for (const auto& e : elems) F.insert(monomial_from_json(e));
  return F;
}

inline MonomialSet filter_from_json_text(const std::string& text) {
  try {
    return filter_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad filter JSON: ") + e.what());
  }
}

inline json hasse_to_json(const HasseDiagram& h) {
  const int n = *h.poset().nvars;
  json vertices = json::array(), labels = json::array(), covers = json::array();
  for (const auto& m : h.vertices()) {
    vertices.push_back(to_json(m, n));
    labels.push_back(m.to_string());
  }
  for (const auto& [lo, up] : h.covers()) covers.push_back({lo, up});
  json out{{"poset", h.poset().to_string()}, {"vertices", vertices}, {"labels", labels}, {"covers", covers}};
  if (h.max_degree()) out["max_degree"] = *h.max_degree();
  return out;
}

/// One node per vertex, one edge per cover, drawn upper -> lower.
inline std::string hasse_to_dot(const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < h.size(); ++k) os << "  v" << k << " [label=\"" << h.vertex(k).to_string() << "\"];\n";
  for (const auto& [lo, up] : h.covers()) os << "  v" << up << " -> v" << lo << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace borel
