#pragma once

// Brute-force reference implementations used by the test suites and the
// verify command. Deliberately naive; nothing in the library proper
// depends on this header.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "error.hpp"
#include "filters.hpp"
#include "monomial.hpp"
#include "orders.hpp"

namespace borel::oracle {

/// The order relation on an explicit ground set, from pairwise leq.
struct Relation {
  PosetId poset;
  std::vector<Monomial> ground;
  std::vector<std::vector<char>> le;  // le[a][b]: ground[a] <= ground[b]

  Relation(PosetId p, std::vector<Monomial> g) : poset(p), ground(std::move(g)) {
    le.assign(ground.size(), std::vector<char>(ground.size(), 0));
    for (std::size_t a = 0; a < ground.size(); ++a)
      for (std::size_t b = 0; b < ground.size(); ++b) le[a][b] = leq(poset, ground[a], ground[b]);
  }

  std::size_t size() const { return ground.size(); }
};

/// Filter counts by cardinality, by scanning every subset.
inline std::vector<bigint> filter_distribution(const Relation& r) {
  const std::size_t N = r.size();
  if (N > 22) throw cap_exceeded("powerset oracle is limited to 22 elements");
  std::vector<bigint> dist(N + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << N); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < N && ok; ++a) {
      if (!(s >> a & 1)) continue;
      for (std::size_t b = 0; b < N && ok; ++b)
        if (r.le[a][b] && !(s >> b & 1)) ok = false;
    }
    if (ok) ++dist[static_cast<std::size_t>(__builtin_popcountll(s))];
  }
  return dist;
}

/// Greatest lower bound by scanning, or nothing.
inline std::optional<Monomial> infimum(const Relation& r, std::size_t a, std::size_t b) {
  std::optional<std::size_t> best;
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (!r.le[x][a] || !r.le[x][b]) continue;
    bool greatest = true;
    for (std::size_t y = 0; y < r.size() && greatest; ++y)
      if (r.le[y][a] && r.le[y][b] && !r.le[y][x]) greatest = false;
    if (greatest) best = x;
  }
  if (!best) return std::nullopt;
  return r.ground[*best];
}

inline std::optional<Monomial> supremum(const Relation& r, std::size_t a, std::size_t b) {
  std::optional<std::size_t> best;
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (!r.le[a][x] || !r.le[b][x]) continue;
    bool least = true;
    for (std::size_t y = 0; y < r.size() && least; ++y)
      if (r.le[a][y] && r.le[b][y] && !r.le[x][y]) least = false;
    if (least) best = x;
  }
  if (!best) return std::nullopt;
  return r.ground[*best];
}

/// Largest antichain by scanning every subset.
inline long max_antichain(const Relation& r) {
  const std::size_t N = r.size();
  if (N > 22) throw cap_exceeded("antichain oracle is limited to 22 elements");
  long best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << N); ++s) {
    const long c = __builtin_popcountll(s);
    if (c <= best) continue;
    bool anti = true;
    for (std::size_t a = 0; a < N && anti; ++a)
      for (std::size_t b = 0; b < N && anti; ++b)
        if (a != b && (s >> a & 1) && (s >> b & 1) && r.le[a][b]) anti = false;
    if (anti) best = c;
  }
  return best;
}

/// Strictly decreasing partitions of v with parts <= bound.
inline bigint distinct_partition_count(long v, int bound) {
  std::function<bigint(long, int)> rec = [&](long left, int max_part) -> bigint {
    if (left == 0) return 1;
    bigint s = 0;
    for (int p = 1; p <= max_part && p <= left; ++p) s += rec(left - p, p - 1);
    return s;
  };
  return v < 0 ? bigint(0) : rec(v, bound);
}

/// Square-free monomials on x_1..x_{d+1} of weight v, x_i weighing d+2-i.
inline bigint squarefree_count(long v, int d) {
  bigint n = 0;
  for (std::uint32_t s = 0; s < (1u << (d + 1)); ++s) {
    long w = 0;
    for (int i = 1; i <= d + 1; ++i)
      if (s >> (i - 1) & 1) w += d + 2 - i;
    if (w == v) ++n;
  }
  return n;
}

/// Gaussian coefficients from the product formula
/// prod_{i=1..a} (1 - q^{b+i}) / (1 - q^i), dividing exactly.
inline std::vector<bigint> gaussian_by_product(int a, int b) {
  std::vector<bigint> p{1};
  for (int i = 1; i <= a; ++i) {
    std::vector<bigint> next(p.size() + static_cast<std::size_t>(b + i), 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k] += p[k];
      next[k + static_cast<std::size_t>(b + i)] -= p[k];
    }
    p = std::move(next);
  }
  for (int i = 1; i <= a; ++i) {
    // Divide by (1 - q^i): c_k = p_k + c_{k-i}.
    std::vector<bigint> c(p.size(), 0);
    for (std::size_t k = 0; k < p.size(); ++k) c[k] = p[k] + (k >= static_cast<std::size_t>(i) ? c[k - static_cast<std::size_t>(i)] : bigint(0));
    p = std::move(c);
  }
  std::size_t deg = static_cast<std::size_t>(a) * static_cast<std::size_t>(b);
  for (std::size_t k = deg + 1; k < p.size(); ++k)
    if (p[k] != 0) throw error("product formula did not divide exactly");
  p.resize(deg + 1);
  return p;
}

/// Walks from (0,k) to (k,0) inside E_{2,k}, by trying every step word.
inline bigint walk_count(int k) {
  bigint n = 0;
  const int len = 2 * k;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << len); ++s) {
    if (__builtin_popcountll(s) != k) continue;  // bits set = Down steps
    int x = 0, y = k;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      if (s >> i & 1) --y;
      else ++x;
      ok = y >= 0 && x + y <= k;
    }
    if (ok) ++n;
  }
  return n;
}

/// Degree-by-degree definition: I ∩ M_v^n is closed under the moves of
/// the order for every v up to the largest generator degree plus extra.
inline bool ideal_closed_degreewise(const IdealGenerators& g, Family order, int extra = 2) {
  const int n = std::max(1, g.max_supp());
  for (int v = 0; v <= g.max_degree() + extra; ++v)
    for (const auto& m : monomials_of_degree(n, v)) {
      if (!g.contains(m)) continue;
      for (int j = 1; j <= n; ++j) {
        if (m[j] == 0) continue;
        if (order == Family::B && j != m.max_supp()) continue;
        for (int i = 1; i < j; ++i)
          if (!g.contains(m.moved(j, i))) return false;
      }
    }
  return true;
}

}  // namespace borel::oracle
