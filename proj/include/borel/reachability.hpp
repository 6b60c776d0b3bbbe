#pragma once

// Breadth-first reachability over the generating relations, written
// directly against exponent vectors. It deliberately shares no code with
// the move generators or the leq implementations so it can serve as an
// independent oracle.

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "orders.hpp"

namespace borel {

struct OracleLimits {
  long max_degree_gap = 12;
  std::size_t max_states = 2'000'000;
};

/// True iff mp is reachable from m by upward generating steps of p.
/// Throws precondition_error when the search would be unbounded.
inline bool reachability_oracle(const PosetId& p, const Monomial& m, const Monomial& mp, OracleLimits lim = {}) {
  require_ground(p, m);
  require_ground(p, mp);
  const long dm = m.total_degree(), dt = mp.total_degree();
  if (dt - dm > lim.max_degree_gap)
    throw precondition_error("reachability search over an unbounded degree gap");
  if (dm > dt) return false;
  // Every generating step keeps the support below the larger of the two
  // supports or is undone later, so this window suffices.
  const int n = p.nvars ? *p.nvars : std::max({1, m.max_supp(), mp.max_supp()});
  const bool fixed_degree = p.degree.has_value() && p.family != Family::D;

  using Vec = std::vector<int>;
  const Vec start = m.exponents(n), target = mp.exponents(n);
  std::set<Vec> seen{start};
  std::queue<Vec> todo;
  todo.push(start);
  auto visit = [&](Vec v) {
    long deg = 0;
    for (int e : v) deg += e;
    if (deg > dt) return false;
    if (v == target) return true;
    if (seen.insert(v).second) {
      if (seen.size() > lim.max_states) throw cap_exceeded("reachability oracle state cap");
      todo.push(std::move(v));
    }
    return false;
  };
  if (start == target) return true;

  while (!todo.empty()) {
    Vec c = todo.front();
    todo.pop();
    // Replacement steps.
    for (int j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      bool last = std::all_of(c.begin() + j + 1, c.end(), [](int e) { return e == 0; });
      for (int i = 0; i < n; ++i) {
        bool ok = false;
        switch (p.family) {
          case Family::A: ok = i < j; break;
          case Family::B: ok = i < j && last; break;
          case Family::C: ok = i > j; break;
          case Family::D: ok = false; break;
        }
        if (!ok) continue;
        Vec v = c;
        --v[j];
        ++v[i];
        if (visit(std::move(v))) return true;
      }
    }
    // Multiplication steps.
    if (!fixed_degree) {
      for (int i = 0; i < n; ++i) {
        Vec v = c;
        ++v[i];
        if (visit(std::move(v))) return true;
      }
    }
  }
  return false;
}

}  // namespace borel
