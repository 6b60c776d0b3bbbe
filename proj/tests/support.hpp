#pragma once

#include <set>
#include <string>
#include <vector>

#include "borel/borel.hpp"

namespace borel::testing {

inline Monomial M(const std::string& s) { return parse_monomial(s); }
inline PosetId P(const std::string& s) { return parse_poset(s); }

inline MonomialSet S(std::initializer_list<const char*> ms) {
  MonomialSet out;
  for (const char* m : ms) out.insert(parse_monomial(m));
  return out;
}

inline std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

inline std::set<std::string> string_set(const std::vector<Monomial>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.to_string());
  return out;
}

}  // namespace borel::testing
