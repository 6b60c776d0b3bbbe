#pragma once

// Filters (up-sets) of finite monomial posets: recognition, the
// spliced characterization for A, counting by pivot recursion,
// enumeration, closed-form counts, and Borel/stable monoid ideals.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "orders.hpp"
#include "poset.hpp"

namespace borel {

using MonomialSet = std::set<Monomial>;

// ---------------------------------------------------------------------------
// Recognition

/// True iff S is upward closed in p (restricted to degree <= max_degree
/// when p has unbounded degree).
inline bool is_filter(const MonomialSet& S, const PosetId& p, std::optional<int> max_degree = std::nullopt) {
  auto inside = [&](const Monomial& m) {
    return in_ground_set(p, m) && (p.degree || !max_degree || m.total_degree() <= *max_degree);
  };
  for (const auto& m : S)
    if (!inside(m)) throw ground_set_error(m.to_string() + " is not in the ground set of " + p.to_string());
  for (const auto& m : S)
    for (const auto& u : generating_moves_up(p, m))
      if (inside(u) && !S.count(u)) return false;
  return true;
}

/// Elements v of F such that every downward swap v*x_j/x_i (i < j <= nvars)
/// stays in F.
inline MonomialSet interior(const MonomialSet& F, int nvars) {
  MonomialSet out;
  for (const auto& v : F) {
    bool keep = true;
    for (int i = 1; i < nvars && keep; ++i) {
      if (v[i] == 0) continue;
      for (int j = i + 1; j <= nvars; ++j)
        if (!F.count(v.moved(i, j))) {
          keep = false;
          break;
        }
    }
    if (keep) out.insert(v);
  }
  return out;
}

/// Elements m of F with m = (x_i/x_j) t for some t outside F, i < j <= nvars.
inline MonomialSet boundary(const MonomialSet& F, int nvars) {
  MonomialSet out;
  for (const auto& m : F) {
    bool hit = false;
    for (int i = 1; i < nvars && !hit; ++i) {
      if (m[i] == 0) continue;
      for (int j = i + 1; j <= nvars && !hit; ++j) hit = !F.count(m.moved(i, j));
    }
    if (hit) out.insert(m);
  }
  return out;
}

/// Layers F_i = { m in M_{d-i}^{n-1} : x_n^i m in F }, i = 0..d.
inline std::vector<MonomialSet> splice_layers(const MonomialSet& F, int n, int d) {
  std::vector<MonomialSet> layers(static_cast<std::size_t>(d) + 1);
  for (const auto& m : F) {
    if (m.max_supp() > n || m.total_degree() != d)
      throw ground_set_error(m.to_string() + " is not in M_" + std::to_string(d) + "^" + std::to_string(n));
    auto e = m.exponents(n);
    const int i = e.back();
    e.back() = 0;
    layers[static_cast<std::size_t>(i)].insert(Monomial(std::move(e)));
  }
  return layers;
}

/// Layer-wise criterion for F being a filter of (M_d^n, A_{n,d}), n >= 3.
inline bool is_filter_spliced(const MonomialSet& F, int n, int d) {
  if (n < 3) throw precondition_error("the spliced criterion needs n >= 3");
  if (d < 0) throw precondition_error("degree must be non-negative");
  auto layers = splice_layers(F, n, d);
  for (int i = 0; i <= d; ++i) {
    const auto& Fi = layers[static_cast<std::size_t>(i)];
    if (!is_filter(Fi, make_poset(Family::A, n - 1, d - i))) return false;
    if (i < d) {
      auto inner = interior(Fi, n - 1);
      for (const auto& m : layers[static_cast<std::size_t>(i) + 1])
        if (!inner.count(m.times_variable(1))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Counting

enum class PivotRule {
  balanced,  ///< maximize #I(x) * #F(x)
  random,    ///< uniform over the remaining elements (seeded)
};

/// Filter counts by cardinality through the pivot recursion
/// Phi(A) = Phi(A \ I(x)) + shift_{#F(x)} Phi(A \ F(x)), memoized on A.
class FilterCounter {
 public:
  explicit FilterCounter(const HasseDiagram& h, PivotRule rule = PivotRule::balanced, std::uint64_t seed = 0)
      : h_(h), up_(h.up_sets()), down_(h.down_sets()), rule_(rule), rng_(seed) {}
  FilterCounter(HasseDiagram&&, PivotRule = PivotRule::balanced, std::uint64_t = 0) = delete;

  /// Entry v is the number of filters of cardinality v.
  const std::vector<bigint>& distribution() { return phi(full()); }

  bigint total() {
    bigint s = 0;
    for (const auto& c : distribution()) s += c;
    return s;
  }

  bigint of_cardinality(long v) {
    const auto& dist = distribution();
    return v < 0 || static_cast<std::size_t>(v) >= dist.size() ? bigint(0) : dist[static_cast<std::size_t>(v)];
  }

  /// Visit every filter (of cardinality v, if given) as a vertex bitset.
  void for_each(std::optional<long> v, const std::function<void(const Bitset&)>& emit) {
    Bitset chosen(h_.size());
    walk(full(), chosen, v, emit);
  }

  const HasseDiagram& diagram() const { return h_; }

 private:
  Bitset full() const {
    Bitset a(h_.size());
    a.set();
    return a;
  }

  std::size_t pivot(const Bitset& a) {
    if (rule_ == PivotRule::random) {
      std::uniform_int_distribution<std::size_t> pick(0, a.count() - 1);
      auto k = pick(rng_);
      auto x = a.find_first();
      while (k--) x = a.find_next(x);
      return x;
    }
    std::size_t best = a.find_first();
    std::size_t score = 0;
    for (auto x = a.find_first(); x != Bitset::npos; x = a.find_next(x)) {
      const std::size_t s = (down_[x] & a).count() * (up_[x] & a).count();
      if (s > score) {
        score = s;
        best = x;
      }
    }
    return best;
  }

  const std::vector<bigint>& phi(const Bitset& a) {
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    std::vector<bigint> out(a.count() + 1, 0);
    if (a.none()) {
      out[0] = 1;
    } else {
      const auto x = pivot(a);
      const Bitset without_down = a - down_[x];
      const Bitset up = up_[x] & a;
      const auto shift = up.count();
      // References into a node-based map survive later insertions.
      const auto& lo = phi(without_down);
      const auto& hi = phi(a - up);
      for (std::size_t k = 0; k < lo.size(); ++k) out[k] += lo[k];
      for (std::size_t k = 0; k < hi.size(); ++k) out[k + shift] += hi[k];
    }
    return memo_.emplace(a, std::move(out)).first->second;
  }

  void walk(const Bitset& a, Bitset& chosen, std::optional<long> need, const std::function<void(const Bitset&)>& emit) {
    if (need) {
      const auto& dist = phi(a);
      if (*need < 0 || static_cast<std::size_t>(*need) >= dist.size() || dist[static_cast<std::size_t>(*need)] == 0) return;
    }
    if (a.none()) {
      emit(chosen);
      return;
    }
    const auto x = pivot(a);
    walk(a - down_[x], chosen, need, emit);
    const Bitset up = up_[x] & a;
    const Bitset saved = chosen;
    chosen |= up;
    walk(a - up, chosen, need ? std::optional<long>(*need - static_cast<long>(up.count())) : std::nullopt, emit);
    chosen = saved;
  }

  const HasseDiagram& h_;
  const std::vector<Bitset>& up_;
  const std::vector<Bitset>& down_;
  PivotRule rule_;
  std::mt19937_64 rng_;
  std::unordered_map<Bitset, std::vector<bigint>> memo_;
};

/// Number of filters of h, or of those with cardinality v.
inline bigint count_filters(const HasseDiagram& h, std::optional<long> v = std::nullopt) {
  FilterCounter c(h);
  return v ? c.of_cardinality(*v) : c.total();
}

inline std::vector<bigint> filter_distribution(const HasseDiagram& h) { return FilterCounter(h).distribution(); }

inline MonomialSet to_monomials(const HasseDiagram& h, const Bitset& s) {
  MonomialSet out;
  for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k)) out.insert(h.vertex(k));
  return out;
}

/// All filters (of cardinality v, if given). Throws cap_exceeded when the
/// count is above cap.
inline std::vector<MonomialSet> enumerate_filters(const HasseDiagram& h, std::optional<long> v = std::nullopt,
                                                  std::size_t cap = 1'000'000) {
  FilterCounter c(h);
  const bigint n = v ? c.of_cardinality(*v) : c.total();
  if (n > cap) throw cap_exceeded(h.label() + " has " + n.str() + " filters, above the cap of " + std::to_string(cap));
  std::vector<MonomialSet> out;
  c.for_each(v, [&](const Bitset& s) { out.push_back(to_monomials(h, s)); });
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

inline bigint catalan(int N) {
  if (N < 0) throw precondition_error("catalan needs N >= 0");
  bigint c = 1;
  for (int k = 0; k < N; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// F(3,d,v): filters of cardinality v in (M_d^3, A_{3,d}).
inline bigint F3dv(int d, long v) {
  if (d < 1) throw precondition_error("F3dv needs d >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, long>, bigint> memo;
  std::function<bigint(int, long)> rec = [&](int dd, long vv) -> bigint {
    if (vv < 0) return 0;
    if (dd == 1) return vv <= 3 ? 1 : 0;
    if (auto it = memo.find({dd, vv}); it != memo.end()) return it->second;
    bigint r = rec(dd - 1, vv) + rec(dd - 1, vv - (dd + 1));
    memo.emplace(std::make_pair(dd, vv), r);
    return r;
  };
  std::lock_guard lock(mu);
  return rec(d, v);
}

/// S_d(a,b,w): paths in E_{2,d+2} from (a,b) to (d+2,0) of weight w, by
/// the boundary rows and the column-descent recurrence. A vertical step
/// (a,b) -> (a,b-1) weighs d+2-a-b; horizontal steps weigh nothing.
inline bigint weighted_path_count(int d, int a, int b, long w) {
  if (d < 0) throw precondition_error("weighted_path_count needs d >= 0");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, long>, bigint> memo;
  std::function<bigint(int, int, long)> rec = [&](int aa, int bb, long ww) -> bigint {
    if (aa < 0 || bb < 0 || aa + bb > d + 2) return 0;
    if (ww < 0) return 0;  // all labels are non-negative
    if (bb == 0) return ww == d - aa + 1 ? 1 : 0;
    if (bb == 1) return ww <= d + 1 - aa ? 1 : 0;
    auto key = std::make_tuple(d, aa, bb, ww);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bigint s = 0;
    for (int j = aa; j <= d + 2 - bb; ++j) s += rec(j, bb - 1, ww + j + bb - d - 2);
    memo.emplace(key, s);
    return s;
  };
  std::lock_guard lock(mu);
  return rec(a, b, w);
}

/// CC(d,v): filters of cardinality v in (E_{2,d}, divisibility).
inline bigint divisibility_filter_count(int d, long v) { return weighted_path_count(d, 0, d + 2, v); }

struct StableFilterCounts {
  bigint total;                      ///< G(d)
  std::vector<bigint> by_cardinality;  ///< GG(d, v), v = 0..#M_d^3
};

/// Filters of (M_d^3, B_{3,d}). GG(d,v) = GG(d-1,v) + CC(d-1, v-d-1):
/// a filter either misses x_2^d (then it lives in x_1 M_{d-1}^3) or
/// contains the whole chain M_d^2 and a divisibility filter of E_{2,d-1}.
/// G(d) = G(d-1) + C_{d+1}, the Catalan count of E_{2,d-1} filters.
inline StableFilterCounts stable_filter_counts(int d) {
  if (d < 0) throw precondition_error("stable_filter_counts needs d >= 0");
  std::vector<bigint> gg{1, 1};
  bigint g = 2;
  for (int k = 1; k <= d; ++k) {
    const std::size_t size = static_cast<std::size_t>((k + 1) * (k + 2) / 2);
    std::vector<bigint> next(size + 1, 0);
    for (std::size_t v = 0; v <= size; ++v) {
      if (v < gg.size()) next[v] += gg[v];
      const long rest = static_cast<long>(v) - (k + 1);
      if (rest >= 0) next[v] += divisibility_filter_count(k - 1, rest);
    }
    gg = std::move(next);
    g += catalan(k + 1);
  }
  return {g, gg};
}

// ---------------------------------------------------------------------------
// Monoid ideals

/// Minimal generators of a monoid ideal: an antichain under divisibility,
/// kept sorted. Non-minimal inputs are dropped on construction.
class IdealGenerators {
 public:
  IdealGenerators() = default;

  explicit IdealGenerators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
      bool minimal = std::none_of(gens.begin(), gens.end(), [&](const Monomial& h) { return h != g && divides(h, g); });
      if (minimal) gens_.push_back(g);
    }
  }

  const std::vector<Monomial>& gens() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
  }

  long max_degree() const {
    long d = 0;
    for (const auto& g : gens_) d = std::max(d, g.total_degree());
    return d;
  }

  int max_supp() const {
    int n = 0;
    for (const auto& g : gens_) n = std::max(n, g.max_supp());
    return n;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& g : gens_) s += (s.empty() ? "" : ",") + g.to_string();
    return s;
  }

  friend bool operator==(const IdealGenerators&, const IdealGenerators&) = default;

 private:
  std::vector<Monomial> gens_;
};

/// Comma-separated monomials, e.g. "x2^2,x1*x3".
inline IdealGenerators parse_generators(std::string_view text) {
  std::vector<Monomial> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) gens.push_back(parse_monomial(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IdealGenerators(std::move(gens));
}

namespace detail {
inline std::vector<Monomial> ideal_moves(const Monomial& m, Family order) {
  if (order == Family::A) return moves_strong_up(m);
  if (order == Family::B) return moves_stable_up(m);
  throw precondition_error("ideal utilities support the A and B orders only");
}
}  // namespace detail

/// Every move of every generator stays in the ideal.
inline bool is_ideal_closed(const IdealGenerators& g, Family order) {
  for (const auto& m : g.gens())
    for (const auto& u : detail::ideal_moves(m, order))
      if (!g.contains(u)) return false;
  return true;
}

inline bool is_borel_ideal(const IdealGenerators& g) { return is_ideal_closed(g, Family::A); }
inline bool is_stable_ideal(const IdealGenerators& g) { return is_ideal_closed(g, Family::B); }

/// Smallest Borel (A) or stable (B) monoid ideal containing g.
inline IdealGenerators borel_closure(const IdealGenerators& g, Family order) {
  std::set<Monomial> seen(g.gens().begin(), g.gens().end());
  std::vector<Monomial> todo(g.gens().begin(), g.gens().end());
  while (!todo.empty()) {
    Monomial m = std::move(todo.back());
    todo.pop_back();
    for (auto& u : detail::ideal_moves(m, order))
      if (seen.insert(u).second) todo.push_back(std::move(u));
  }
  return IdealGenerators(std::vector<Monomial>(seen.begin(), seen.end()));
}

}  // namespace borel
