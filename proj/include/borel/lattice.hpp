#pragma once

// Meets and joins in A and B, generic lattice diagnostics on a Hasse
// diagram, rank sizes and Gaussian polynomials.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "orders.hpp"
#include "poset.hpp"

namespace borel {

// ---------------------------------------------------------------------------
// A: through xi coordinates

namespace detail {
inline void require_family(const PosetId& p, Family f) {
  if (p.family != f) throw precondition_error("expected a " + std::string(1, family_letter(f)) + " poset, got " + p.to_string());
}
}  // namespace detail

inline Monomial meet_A(const Monomial& m, const Monomial& mp, const PosetId& p) {
  detail::require_family(p, Family::A);
  require_ground(p, m);
  require_ground(p, mp);
  return xi_inverse(XiSequence::pointwise_min(xi(m), xi(mp)));
}

inline Monomial join_A(const Monomial& m, const Monomial& mp, const PosetId& p) {
  detail::require_family(p, Family::A);
  require_ground(p, m);
  require_ground(p, mp);
  return xi_inverse(XiSequence::pointwise_max(xi(m), xi(mp)));
}

// ---------------------------------------------------------------------------
// B: recursive infimum

namespace detail {

inline Monomial meet_B_rec(const Monomial& m, const Monomial& mp, int n, int d) {
  if (d == 0 || n <= 1 || m == mp) return m;
  if (n == 2) return m[1] <= mp[1] ? m : mp;  // B_{2,d} is a chain
  const bool in_m = m[n] > 0, in_mp = mp[n] > 0;
  if (!in_m && !in_mp) return meet_B_rec(m, mp, n - 1, d);
  if (in_m && in_mp) {
    // Strip x_n, take the gcd in E_{n-1,d}, pad back with x_n.
    auto strip = [n](const Monomial& u) {
      auto e = u.exponents(n);
      e.back() = 0;
      return Monomial(std::move(e));
    };
    Monomial g = gcd(strip(m), strip(mp));
    return g.times_variable(n, d - static_cast<int>(g.total_degree()));
  }
  // Mixed. The lower bounds of `free` that involve x_n are the divisors
  // (after dropping x_n) of r/x_i for r <= free in B_{n-1,d}; these need
  // not have a largest element, so take the lcm of their gcds with the
  // other argument.
  const Monomial& free = in_m ? mp : m;
  const Monomial& bound = in_m ? m : mp;
  auto e = bound.exponents(n);
  e.back() = 0;
  const Monomial fb(std::move(e));
  auto below = stable_reachability(n - 1, d);
  const auto target = below->index_of(free);
  Monomial acc;
  for (std::size_t k = 0; k < below->vertices().size(); ++k) {
    if (!below->up_set(k).test(target)) continue;
    const auto& r = below->vertices()[k];
    for (int i = 1; i <= r.max_supp(); ++i)
      if (r[i] > 0) acc = lcm(acc, gcd(quotient(r, Monomial::variable(i)), fb));
  }
  return acc.times_variable(n, d - static_cast<int>(acc.total_degree()));
}

}  // namespace detail

/// Infimum in (M_d^n, B_{n,d}).
inline Monomial meet_B(const Monomial& m, const Monomial& mp, int n, int d) {
  const PosetId p = make_poset(Family::B, n, d);
  require_ground(p, m);
  require_ground(p, mp);
  return detail::meet_B_rec(m, mp, n, d);
}

/// Supremum in (M_d^n, B_{n,d}): the meet of all common upper bounds.
inline Monomial join_B(const Monomial& m, const Monomial& mp, int n, int d) {
  const PosetId p = make_poset(Family::B, n, d);
  require_ground(p, m);
  require_ground(p, mp);
  auto table = stable_reachability(n, d);
  Bitset common = table->up_set(table->index_of(m)) & table->up_set(table->index_of(mp));
  std::optional<Monomial> acc;
  for (auto j = common.find_first(); j != Bitset::npos; j = common.find_next(j)) {
    const auto& u = table->vertices()[j];
    acc = acc ? detail::meet_B_rec(*acc, u, n, d) : u;
  }
  if (!acc || !common.test(table->index_of(*acc))) throw structure_error("no least upper bound in " + p.to_string());
  return *acc;
}

// ---------------------------------------------------------------------------
// Generic lattice tables

/// Meet and join tables of a finite poset, computed from its order
/// relation. Entries are npos where the bound does not exist.
class LatticeTables {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit LatticeTables(const HasseDiagram& h) : n_(h.size()), meet_(n_ * n_, npos), join_(n_ * n_, npos) {
    const auto& up = h.up_sets();
    const auto& down = h.down_sets();
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a; b < n_; ++b) {
        Bitset lo = down[a] & down[b];
        Bitset hi = up[a] & up[b];
        std::size_t m = extreme(lo, down), j = extreme(hi, up);
        meet_[a * n_ + b] = meet_[b * n_ + a] = m;
        join_[a * n_ + b] = join_[b * n_ + a] = j;
        if (m == npos || j == npos) lattice_ = false;
      }
    }
  }

  std::size_t size() const { return n_; }
  bool is_lattice() const { return lattice_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }

 private:
  // The element x of `set` whose own cone (down- or up-set) covers all
  // of `set`; that is the greatest lower / least upper bound.
  static std::size_t extreme(const Bitset& set, const std::vector<Bitset>& cone) {
    const auto need = set.count();
    for (auto x = set.find_first(); x != Bitset::npos; x = set.find_next(x))
      if (cone[x].count() == need && set.is_subset_of(cone[x])) return x;
    return npos;
  }

  std::size_t n_;
  std::vector<std::size_t> meet_, join_;
  bool lattice_ = true;
};

struct DistributivityReport {
  bool distributive = true;
  /// (a, b, c) with a meet (b join c) != (a meet b) join (a meet c).
  std::optional<std::array<Monomial, 3>> witness;
};

inline DistributivityReport check_distributive(const HasseDiagram& h) {
  LatticeTables t(h);
  if (!t.is_lattice()) throw structure_error(h.label() + " is not a lattice");
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      for (std::size_t c = b + 1; c < t.size(); ++c)
        if (t.meet(a, t.join(b, c)) != t.join(t.meet(a, b), t.meet(a, c)))
          return {false, std::array<Monomial, 3>{h.vertex(a), h.vertex(b), h.vertex(c)}};
  return {};
}

/// (bottom, a, b, c, top) with b < c, a incomparable to both, and
/// a∧b = a∧c = bottom, a∨b = a∨c = top.
inline std::optional<std::array<Monomial, 5>> find_N5(const HasseDiagram& h) {
  LatticeTables t(h);
  if (!t.is_lattice()) throw structure_error(h.label() + " is not a lattice");
  const auto& up = h.up_sets();
  auto comparable = [&](std::size_t x, std::size_t y) { return up[x].test(y) || up[y].test(x); };
  for (std::size_t b = 0; b < t.size(); ++b)
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (b == c || !up[b].test(c)) continue;
      for (std::size_t a = 0; a < t.size(); ++a) {
        if (comparable(a, b) || comparable(a, c)) continue;
        if (t.meet(a, b) == t.meet(a, c) && t.join(a, b) == t.join(a, c))
          return std::array<Monomial, 5>{h.vertex(t.meet(a, b)), h.vertex(a), h.vertex(b), h.vertex(c),
                                         h.vertex(t.join(a, b))};
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ranks, Gaussian polynomials, height and width

/// Longest-chain depth of every vertex from a minimal element.
inline std::vector<long> longest_depths(const HasseDiagram& h) {
  std::vector<long> depth(h.size(), 0);
  for (auto v : h.topological_order())
    for (auto u : h.upper_covers(v)) depth[u] = std::max(depth[u], depth[v] + 1);
  return depth;
}

/// Number of vertices of each rank. Throws structure_error unless every
/// cover raises the rank by exactly one and all maximal elements share a rank.
inline std::vector<std::size_t> rank_sizes(const HasseDiagram& h) {
  auto rank = longest_depths(h);
  std::optional<long> top;
  for (std::size_t v = 0; v < h.size(); ++v) {
    for (auto u : h.upper_covers(v))
      if (rank[u] != rank[v] + 1) throw structure_error(h.label() + " is not graded");
    if (h.upper_covers(v).empty()) {
      if (top && *top != rank[v]) throw structure_error(h.label() + " is not graded");
      top = rank[v];
    }
  }
  std::vector<std::size_t> sizes(top ? static_cast<std::size_t>(*top) + 1 : 0, 0);
  for (auto r : rank) ++sizes[static_cast<std::size_t>(r)];
  return sizes;
}

struct GaussianPolynomial {
  int a = 0, b = 0;
  std::vector<bigint> coefficients;  // c_0 .. c_{ab}
};

/// [a+b choose a]_q via the q-Pascal rule
/// [m choose k] = [m-1 choose k-1] + q^k [m-1 choose k].
inline GaussianPolynomial gaussian(int a, int b) {
  if (a < 0 || b < 0) throw precondition_error("gaussian needs non-negative arguments");
  const int m = a + b;
  // row[k] = [i choose k]_q for the current i.
  std::vector<std::vector<bigint>> row{{1}};
  for (int i = 1; i <= m; ++i) {
    std::vector<std::vector<bigint>> next(static_cast<std::size_t>(i) + 1);
    for (int k = 0; k <= i; ++k) {
      std::vector<bigint> poly(static_cast<std::size_t>(k) * static_cast<std::size_t>(i - k) + 1, 0);
      if (k >= 1) {
        const auto& p = row[static_cast<std::size_t>(k - 1)];
        for (std::size_t e = 0; e < p.size(); ++e) poly[e] += p[e];
      }
      if (k <= i - 1) {
        const auto& p = row[static_cast<std::size_t>(k)];
        for (std::size_t e = 0; e < p.size(); ++e) poly[e + static_cast<std::size_t>(k)] += p[e];
      }
      next[static_cast<std::size_t>(k)] = std::move(poly);
    }
    row = std::move(next);
  }
  return {a, b, row[static_cast<std::size_t>(a)]};
}

struct HeightWidth {
  long height = 0;
  long width = 0;
};

/// Height (edges on a longest chain) and width (largest antichain, as the
/// size of a minimum chain cover by bipartite matching).
inline HeightWidth height_width(const HasseDiagram& h) {
  HeightWidth out;
  for (auto d : longest_depths(h)) out.height = std::max(out.height, d);
  const auto& up = h.up_sets();
  const std::size_t N = h.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> match_right(N, none);
  std::vector<char> used;
  std::function<bool(std::size_t)> augment = [&](std::size_t v) {
    for (auto u = up[v].find_first(); u != Bitset::npos; u = up[v].find_next(u)) {
      if (u == v || used[u]) continue;
      used[u] = 1;
      if (match_right[u] == none || augment(match_right[u])) {
        match_right[u] = v;
        return true;
      }
    }
    return false;
  };
  long matching = 0;
  for (std::size_t v = 0; v < N; ++v) {
    used.assign(N, 0);
    if (augment(v)) ++matching;
  }
  out.width = static_cast<long>(N) - matching;
  return out;
}

}  // namespace borel
