#pragma once

// Term orders (lex, deglex, degrevlex, weighted) with x_1 > x_2 > ...,
// refinement checks against A and the ordinal sum of the A_{n,d}, and a
// search for weight orders separating an incomparable pair.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "orders.hpp"

namespace borel {

enum class Cmp { Less, Equal, Greater };

inline std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "<";
    case Cmp::Equal: return "=";
    case Cmp::Greater: return ">";
  }
  return "?";
}

enum class OrderKind { lex, deglex, degrevlex, weighted };

struct TermOrder {
  OrderKind kind = OrderKind::lex;
  std::vector<long> weights;       ///< weighted only: weight of x_1, x_2, ...
  bool degree_first = false;       ///< weighted only: compare total degree first

  static TermOrder lex() { return {OrderKind::lex, {}, false}; }
  static TermOrder deglex() { return {OrderKind::deglex, {}, false}; }
  static TermOrder degrevlex() { return {OrderKind::degrevlex, {}, false}; }
  static TermOrder weighted(std::vector<long> w, bool degree_first = false) {
    return {OrderKind::weighted, std::move(w), degree_first};
  }

  bool degree_compatible() const {
    return kind == OrderKind::deglex || kind == OrderKind::degrevlex || (kind == OrderKind::weighted && degree_first);
  }

  std::string to_string() const {
    switch (kind) {
      case OrderKind::lex: return "lex";
      case OrderKind::deglex: return "deglex";
      case OrderKind::degrevlex: return "degrevlex";
      case OrderKind::weighted: {
        std::string s = degree_first ? "degweight(" : "weight(";
        for (std::size_t k = 0; k < weights.size(); ++k) s += (k ? "," : "") + std::to_string(weights[k]);
        return s + ")";
      }
    }
    return "?";
  }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

inline TermOrder parse_term_order(const std::string& name) {
  if (name == "lex") return TermOrder::lex();
  if (name == "deglex") return TermOrder::deglex();
  if (name == "degrevlex") return TermOrder::degrevlex();
  throw parse_error("unknown term order '" + name + "' (expected lex, deglex or degrevlex)");
}

namespace detail {
template <class T>
Cmp three_way(T a, T b) {
  return a < b ? Cmp::Less : (a > b ? Cmp::Greater : Cmp::Equal);
}

inline Cmp lex_cmp(const Monomial& m, const Monomial& mp) {
  const int n = std::max(m.max_supp(), mp.max_supp());
  for (int i = 1; i <= n; ++i)
    if (m[i] != mp[i]) return three_way(m[i], mp[i]);
  return Cmp::Equal;
}
}  // namespace detail

inline Cmp compare(const TermOrder& o, const Monomial& m, const Monomial& mp) {
  using detail::three_way;
  switch (o.kind) {
    case OrderKind::lex:
      return detail::lex_cmp(m, mp);
    case OrderKind::deglex:
      if (m.total_degree() != mp.total_degree()) return three_way(m.total_degree(), mp.total_degree());
      return detail::lex_cmp(m, mp);
    case OrderKind::degrevlex: {
      if (m.total_degree() != mp.total_degree()) return three_way(m.total_degree(), mp.total_degree());
      const int n = std::max(m.max_supp(), mp.max_supp());
      for (int i = n; i >= 1; --i)
        if (m[i] != mp[i]) return three_way(mp[i], m[i]);
      return Cmp::Equal;
    }
    case OrderKind::weighted: {
      const int n = std::max(m.max_supp(), mp.max_supp());
      if (static_cast<std::size_t>(n) > o.weights.size())
        throw precondition_error("weight vector " + o.to_string() + " is too short for x" + std::to_string(n));
      if (o.degree_first && m.total_degree() != mp.total_degree()) return three_way(m.total_degree(), mp.total_degree());
      long a = 0, b = 0;
      for (int i = 1; i <= n; ++i) {
        a += o.weights[static_cast<std::size_t>(i - 1)] * m[i];
        b += o.weights[static_cast<std::size_t>(i - 1)] * mp[i];
      }
      if (a != b) return three_way(a, b);
      return detail::lex_cmp(m, mp);
    }
  }
  return Cmp::Equal;
}

/// Degrees compare first (higher degree is greater); equal degrees
/// compare in A.
inline bool ordinal_sum_leq(const Monomial& m, const Monomial& mp, int n) {
  if (m.max_supp() > n || mp.max_supp() > n) throw ground_set_error("monomial has support beyond x" + std::to_string(n));
  if (m.total_degree() != mp.total_degree()) return m.total_degree() < mp.total_degree();
  return leq_A(m, mp);
}

using Violation = std::optional<std::pair<Monomial, Monomial>>;

/// First pair m < m' of A_{n,.} (degrees <= maxdeg) that o does not put
/// in the same order, or nothing.
inline Violation refines_A(const TermOrder& o, int n, int maxdeg) {
  const auto all = monomials_up_to_degree(n, maxdeg);
  for (const auto& m : all)
    for (const auto& mp : all)
      if (m != mp && leq_A(m, mp) && compare(o, m, mp) != Cmp::Less) return std::make_pair(m, mp);
  return std::nullopt;
}

/// Same check against the ordinal sum of the A_{n,d}.
inline Violation refines_ordinal_sum(const TermOrder& o, int n, int maxdeg) {
  const auto all = monomials_up_to_degree(n, maxdeg);
  for (const auto& m : all)
    for (const auto& mp : all)
      if (m != mp && ordinal_sum_leq(m, mp, n) && compare(o, m, mp) != Cmp::Less) return std::make_pair(m, mp);
  return std::nullopt;
}

/// Calls visit on strictly decreasing positive integer vectors of length
/// n in order of increasing sum, until visit returns true or budget
/// vectors have been tried. Returns whether visit accepted one.
inline bool for_each_decreasing_weight(int n, std::size_t budget, const std::function<bool(const std::vector<long>&)>& visit) {
  if (n < 1) throw precondition_error("weight vectors need n >= 1");
  std::size_t seen = 0;
  bool accepted = false;
  auto stop = [&] { return accepted || seen >= budget; };
  std::vector<long> w(static_cast<std::size_t>(n));
  // Fill w[k..] with a strictly decreasing tail summing to `left`, every
  // entry below `cap`.
  std::function<void(int, long, long)> fill = [&](int k, long left, long cap) {
    const int rest = n - k;
    if (rest == 0) {
      if (left == 0) {
        accepted = visit(w);
        ++seen;
      }
      return;
    }
    const long min_tail = static_cast<long>(rest - 1) * rest / 2;  // 1 + 2 + ... + (rest-1)
    for (long v = std::min(cap - 1, left - min_tail); v >= rest && !stop(); --v) {
      w[static_cast<std::size_t>(k)] = v;
      fill(k + 1, left - v, v);
    }
  };
  for (long total = static_cast<long>(n) * (n + 1) / 2; !stop(); ++total) fill(0, total, total + 1);
  return accepted;
}

struct Witnesses {
  TermOrder greater;  ///< puts m above m'
  TermOrder less;     ///< puts m below m'
};

/// Two admissible weight orders on n variables that disagree on {m, m'}.
/// The pair must be incomparable in A_{n,.} (or, for degree-compatible
/// witnesses, in the ordinal sum). Throws error when the budget runs out.
inline Witnesses separating_witnesses(const Monomial& m, const Monomial& mp, int n, bool degree_compatible = false,
                                      std::size_t budget = 10'000) {
  if (m.max_supp() > n || mp.max_supp() > n) throw ground_set_error("monomial has support beyond x" + std::to_string(n));
  const bool comparable = degree_compatible ? (ordinal_sum_leq(m, mp, n) || ordinal_sum_leq(mp, m, n))
                                            : (leq_A(m, mp) || leq_A(mp, m));
  if (comparable) throw precondition_error(m.to_string() + " and " + mp.to_string() + " are comparable");
  std::optional<TermOrder> up, down;
  for_each_decreasing_weight(n, budget, [&](const std::vector<long>& w) {
    long a = 0, b = 0;
    for (int i = 1; i <= n; ++i) {
      a += w[static_cast<std::size_t>(i - 1)] * m[i];
      b += w[static_cast<std::size_t>(i - 1)] * mp[i];
    }
    if (a == b) return false;  // only count weights that separate on their own
    auto o = TermOrder::weighted(w, degree_compatible);
    const auto c = compare(o, m, mp);
    if (c == Cmp::Greater && !up) up = o;
    if (c == Cmp::Less && !down) down = o;
    return up && down;
  });
  if (!up || !down)
    throw error("no separating weights for " + m.to_string() + ", " + mp.to_string() + " within " + std::to_string(budget) + " candidates");
  return {*up, *down};
}

/// A weight order with strictly decreasing weights drawn from [1, 50].
inline TermOrder random_weighted_order(int n, std::mt19937_64& rng, bool degree_first = false) {
  std::uniform_int_distribution<long> pick(1, 50);
  std::vector<long> w;
  while (static_cast<int>(w.size()) < n) {
    long v = pick(rng);
    if (std::find(w.begin(), w.end(), v) == w.end()) w.push_back(v);
  }
  std::sort(w.rbegin(), w.rend());
  return TermOrder::weighted(std::move(w), degree_first);
}

}  // namespace borel
