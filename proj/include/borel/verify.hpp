#pragma once

// Named self-check suites: the acceptance criteria (acceptance-1 ..
// acceptance-10) plus per-module property suites. Each suite compares the
// library against the brute-force oracles and reports pass/fail counts
// with the first few counterexamples. Randomized cases draw from a
// seeded mt19937_64, so a (suite, seed) pair always yields the same report.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "error.hpp"
#include "filters.hpp"
#include "lattice.hpp"
#include "monomial.hpp"
#include "oracles.hpp"
#include "orders.hpp"
#include "poset.hpp"
#include "reachability.hpp"
#include "termorders.hpp"
#include "young.hpp"

namespace borel {

inline constexpr std::uint64_t default_seed = 20240601;

struct VerifyReport {
  std::string suite;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  ///< first counterexamples, smallest cases first
  std::vector<std::string> notes;     ///< informational findings, not pass/fail
  double runtime_ms = 0;

  bool ok() const { return failed == 0; }
};

namespace detail {

inline std::string str(const bigint& x) { return x.str(); }

template <class T>
std::string join_values(const std::vector<T>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ' ';
    if constexpr (std::is_same_v<T, bigint>) s += xs[k].str();
    else s += std::to_string(xs[k]);
  }
  return s;
}

class Checker {
 public:
  static constexpr std::size_t kept_failures = 12;

  explicit Checker(VerifyReport& r) : r_(r) {}

  /// Records one case. describe() runs only on failure.
  template <class Describe>
  bool operator()(bool ok, Describe&& describe) {
    if (ok) {
      ++r_.passed;
    } else {
      ++r_.failed;
      if (r_.failures.size() < kept_failures) r_.failures.push_back(describe());
    }
    return ok;
  }

  void note(std::string s) { r_.notes.push_back(std::move(s)); }

 private:
  VerifyReport& r_;
};

inline PosetId P(Family f, int n, int d) { return make_poset(f, n, d); }

inline std::string set_to_string(const MonomialSet& F) {
  std::string s = "{";
  for (const auto& m : F) s += (s.size() > 1 ? "," : "") + m.to_string();
  return s + "}";
}

inline bool is_palindromic(const std::vector<std::size_t>& c) { return std::equal(c.begin(), c.end(), c.rbegin()); }

inline bool is_unimodal(const std::vector<std::size_t>& c) {
  std::size_t k = 0;
  while (k + 1 < c.size() && c[k] <= c[k + 1]) ++k;
  while (k + 1 < c.size() && c[k] >= c[k + 1]) ++k;
  return k + 1 >= c.size();
}

/// y-coordinate at which each Right step of the walk is taken.
inline std::vector<int> walk_profile(const LatticeWalk& w) {
  std::vector<int> out;
  int y = w.size();
  for (Step s : w.steps()) {
    if (s == Step::Down) --y;
    else out.push_back(y);
  }
  return out;
}

inline bool subset(const MonomialSet& a, const MonomialSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// ---------------------------------------------------------------------------
// Shared pieces

inline void check_rank_structure(Checker& check, int n, int d) {
  const HasseDiagram h(P(Family::A, n, d));
  const auto rs = rank_sizes(h);
  const auto g = gaussian(n - 1, d).coefficients;
  std::vector<std::size_t> gs;
  for (const auto& c : g) gs.push_back(static_cast<std::size_t>(c));
  check(rs == gs, [&] { return h.label() + ": rank sizes " + join_values(rs) + " vs gaussian " + join_values(g); });
  check(is_palindromic(rs) && is_unimodal(rs), [&] { return h.label() + ": ranks not palindromic/unimodal: " + join_values(rs); });
  const auto hw = height_width(h);
  const long want_h = static_cast<long>(n - 1) * d;
  check(hw.height == want_h, [&] { return h.label() + ": height " + std::to_string(hw.height) + ", expected " + std::to_string(want_h); });
  const auto middle = g[static_cast<std::size_t>(want_h / 2)];
  check(bigint(hw.width) == middle, [&] { return h.label() + ": width " + std::to_string(hw.width) + ", middle coefficient " + str(middle); });
}

inline void check_meet_join_B(Checker& check, int n, int d, bool joins) {
  const oracle::Relation r(P(Family::B, n, d), monomials_of_degree(n, d));
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = a; b < r.size(); ++b) {
      const auto& m = r.ground[a];
      const auto& mp = r.ground[b];
      const auto inf = oracle::infimum(r, a, b);
      const auto got = meet_B(m, mp, n, d);
      check(inf && *inf == got, [&] {
        return "B_{" + std::to_string(n) + "," + std::to_string(d) + "}: meet(" + m.to_string() + ", " + mp.to_string() +
               ") = " + got.to_string() + ", brute force " + (inf ? inf->to_string() : "none");
      });
      if (!joins) continue;
      const auto sup = oracle::supremum(r, a, b);
      const auto gj = join_B(m, mp, n, d);
      check(sup && *sup == gj, [&] {
        return "B_{" + std::to_string(n) + "," + std::to_string(d) + "}: join(" + m.to_string() + ", " + mp.to_string() +
               ") = " + gj.to_string() + ", brute force " + (sup ? sup->to_string() : "none");
      });
    }
}

inline void check_fountains(Checker& check, int max_w, int max_w_filters) {
  const auto gf = fountain_gf_coefficients(max_w);
  for (int w = 0; w <= max_w; ++w) {
    const auto e = count_fountains(w);
    check(e == gf[static_cast<std::size_t>(w)],
          [&] { return "w=" + std::to_string(w) + ": " + str(e) + " fountains, GF coefficient " + str(gf[static_cast<std::size_t>(w)]); });
  }
  for (int w = 0; w <= max_w_filters; ++w) {
    const auto e = count_fountains(w);
    const HasseDiagram h(P(Family::B, 3, w + 1));
    const auto f = count_filters(h, w);
    const auto gg = stable_filter_counts(w + 1).by_cardinality[static_cast<std::size_t>(w)];
    check(e == f && f == gg, [&] {
      return "w=" + std::to_string(w) + ": fountains " + str(e) + ", filters of " + h.label() + " " + str(f) + ", GG " + str(gg);
    });
  }
}

// ---------------------------------------------------------------------------
// Acceptance criteria

inline void acceptance_1(Checker& check, std::mt19937_64&) {
  for (int d = 1; d <= 10; ++d) {
    const auto c = count_filters(HasseDiagram(P(Family::A, 3, d)));
    const bigint want = bigint(1) << (d + 1);
    check(c == want, [&] { return "A_{3," + std::to_string(d) + "}: " + str(c) + " filters, expected " + str(want); });
  }
  for (int d = 1; d <= 20; ++d) {
    const auto c = count_filters(HasseDiagram(P(Family::A, 2, d)));
    check(c == d + 2, [&] { return "A_{2," + std::to_string(d) + "}: " + str(c) + " filters, expected " + std::to_string(d + 2); });
  }
}

inline void acceptance_2(Checker& check, std::mt19937_64&) {
  for (int d = 1; d <= 8; ++d) {
    const auto dist = filter_distribution(HasseDiagram(P(Family::A, 3, d)));
    for (std::size_t v = 0; v <= dist.size(); ++v) {
      const bigint counted = v < dist.size() ? dist[v] : bigint(0);
      const auto closed = F3dv(d, static_cast<long>(v));
      const auto parts = oracle::distinct_partition_count(static_cast<long>(v), d + 1);
      check(counted == closed && closed == parts, [&] {
        return "d=" + std::to_string(d) + " v=" + std::to_string(v) + ": filters " + str(counted) + ", F3dv " + str(closed) +
               ", distinct partitions " + str(parts);
      });
    }
  }
}

inline void acceptance_3(Checker& check, std::mt19937_64&) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) check_rank_structure(check, n, d);
}

inline void acceptance_4(Checker& check, std::mt19937_64&) {
  for (auto [n, d] : {std::pair{3, 3}, {3, 4}, {4, 2}}) {
    const auto p = P(Family::A, n, d);
    const auto g = monomials_of_degree(n, d);
    for (const auto& a : g)
      for (const auto& b : g)
        for (const auto& c : g) {
          const bool ok = meet_A(a, join_A(b, c, p), p) == join_A(meet_A(a, b, p), meet_A(a, c, p), p) &&
                          join_A(a, meet_A(b, c, p), p) == meet_A(join_A(a, b, p), join_A(a, c, p), p);
          check(ok, [&] { return p.to_string() + ": distributivity fails at " + a.to_string() + ", " + b.to_string() + ", " + c.to_string(); });
        }
  }
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) check_meet_join_B(check, n, d, false);
  for (auto [n, d] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    const auto pb = P(Family::B, n, d);
    const auto pent = find_N5(HasseDiagram(pb));
    bool genuine = false;
    if (pent) {
      const auto& [bot, a, b, c, top] = *pent;
      auto lt = [&](const Monomial& x, const Monomial& y) { return x != y && leq(pb, x, y); };
      auto inc = [&](const Monomial& x, const Monomial& y) { return !leq(pb, x, y) && !leq(pb, y, x); };
      genuine = lt(bot, a) && lt(bot, b) && lt(b, c) && lt(a, top) && lt(c, top) && inc(a, b) && inc(a, c) &&
                meet_B(a, b, n, d) == bot && meet_B(a, c, n, d) == bot && join_B(a, b, n, d) == top && join_B(a, c, n, d) == top;
    }
    check(genuine, [&] { return pb.to_string() + ": no genuine pentagon found"; });
    const auto pa = P(Family::A, n, d);
    check(!find_N5(HasseDiagram(pa)), [&] { return pa.to_string() + ": unexpected pentagon"; });
  }
}

inline void acceptance_5(Checker& check, std::mt19937_64&) {
  for (Family f : {Family::A, Family::B})
    for (int n = 1; n <= 4; ++n)
      for (int d = 0; d <= 4; ++d) {
        const auto p = P(f, n, d);
        const auto g = monomials_of_degree(n, d);
        for (const auto& m : g)
          for (const auto& mp : g) {
            const bool a = leq(p, m, mp), b = reachability_oracle(p, m, mp);
            check(a == b, [&] {
              return p.to_string() + ": leq(" + m.to_string() + ", " + mp.to_string() + ") = " + std::to_string(a) + ", oracle " + std::to_string(b);
            });
          }
        if (f == Family::A)
          for (const auto& m : g) check(xi_inverse(xi(m)) == m, [&] { return "xi round trip fails at " + m.to_string(); });
      }
}

inline void acceptance_6(Checker& check, std::mt19937_64& rng) {
  for (auto [n, d] : {std::pair{3, 4}, {4, 3}}) {
    const auto p = P(Family::A, n, d);
    const HasseDiagram h(p);
    const auto filters = enumerate_filters(h);
    auto agree = [&](const MonomialSet& S, const char* kind) {
      const bool a = is_filter_spliced(S, n, d), b = is_filter(S, p);
      check(a == b, [&] {
        return p.to_string() + " " + kind + " " + set_to_string(S) + ": spliced " + std::to_string(a) + ", direct " + std::to_string(b);
      });
    };
    for (const auto& F : filters) agree(F, "filter");
    std::uniform_int_distribution<std::size_t> pick_vertex(0, h.size() - 1), pick_filter(0, filters.size() - 1);
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < 500; ++k) {
      MonomialSet S;
      for (const auto& m : h.vertices())
        if (coin(rng)) S.insert(m);
      agree(S, "subset");
    }
    // Near-misses: a filter with one element toggled.
    for (int k = 0; k < 500; ++k) {
      MonomialSet S = filters[pick_filter(rng)];
      const auto& m = h.vertex(pick_vertex(rng));
      if (!S.erase(m)) S.insert(m);
      agree(S, "perturbed");
    }
  }
}

inline void acceptance_7(Checker& check, std::mt19937_64&) {
  // G(d) = G(d-1) + C(d-1), C(k) = filters of (E_{2,k}, divisibility) = catalan(k+2).
  for (int k = 0; k <= 6; ++k) {
    const auto c = count_filters(HasseDiagram(P(Family::D, 2, k)));
    check(c == catalan(k + 2), [&] { return "C(" + std::to_string(k) + ") = " + str(c) + ", catalan(" + std::to_string(k + 2) + ") = " + str(catalan(k + 2)); });
  }
  std::optional<bigint> prev;
  for (int d = 0; d <= 6; ++d) {
    const HasseDiagram h(P(Family::B, 3, d));
    const auto counts = stable_filter_counts(d);
    const auto total = count_filters(h);
    check(total == counts.total, [&] { return h.label() + ": " + str(total) + " filters, recurrence " + str(counts.total); });
    if (prev) {
      const auto cprev = count_filters(HasseDiagram(P(Family::D, 2, d - 1)));
      check(total == *prev + cprev, [&] { return "G(" + std::to_string(d) + ") != G(" + std::to_string(d - 1) + ") + C(" + std::to_string(d - 1) + ")"; });
    }
    prev = total;
    const auto dist = filter_distribution(h);
    for (std::size_t v = 0; v < dist.size(); ++v) {
      const auto gg = v < counts.by_cardinality.size() ? counts.by_cardinality[v] : bigint(0);
      check(dist[v] == gg, [&] { return h.label() + " v=" + std::to_string(v) + ": " + str(dist[v]) + " filters, GG " + str(gg); });
    }
    const auto cdist = filter_distribution(HasseDiagram(P(Family::D, 2, d)));
    for (std::size_t v = 0; v < cdist.size(); ++v) {
      const auto s = weighted_path_count(d, 0, d + 2, static_cast<long>(v));
      check(cdist[v] == s, [&] { return "E_{2," + std::to_string(d) + "} v=" + std::to_string(v) + ": " + str(cdist[v]) + " filters, S_d " + str(s); });
    }
  }
  // Literal walk clause: walks in E_{2,N+1} against catalan(N).
  bool shifted = true;
  for (int N = 0; N <= 10; ++N) {
    const auto walks = count_walks(N + 1);
    const auto brute = oracle::walk_count(N + 1);
    check(walks == brute, [&] { return "E_{2," + std::to_string(N + 1) + "}: " + str(walks) + " walks, brute force " + str(brute); });
    check(walks == catalan(N), [&] {
      return "E_{2," + std::to_string(N + 1) + "}: " + str(walks) + " walks, catalan(" + std::to_string(N) + ") = " + str(catalan(N));
    });
    shifted = shifted && walks == catalan(N + 1);
  }
  if (shifted) check.note("walks in E_{2,N+1} equal catalan(N+1) for every N <= 10");
}

inline void acceptance_8(Checker& check, std::mt19937_64&) { check_fountains(check, 12, 8); }

inline void acceptance_9(Checker& check, std::mt19937_64&) {
  // Monomials and Young diagrams.
  const auto e45 = monomials_up_to_degree(4, 5);
  for (const auto& m : e45) check(young_to_monomial(monomial_to_young(m)) == m, [&] { return "Young round trip fails at " + m.to_string(); });
  const auto c4 = make_poset(Family::C, 4, std::nullopt);
  for (const auto& m : e45)
    for (const auto& mp : e45) {
      const bool a = leq(c4, m, mp), b = monomial_to_young(m).contained_in(monomial_to_young(mp));
      check(a == b, [&] { return "C_{4,.}: " + m.to_string() + " <= " + mp.to_string() + " is " + std::to_string(a) + ", containment " + std::to_string(b); });
    }

  for (int d = 1; d <= 6; ++d) {
    // Filters of A_{3,d} and distinct partitions.
    const HasseDiagram h(P(Family::A, 3, d));
    const auto filters = enumerate_filters(h);
    std::vector<DistinctPartition> parts;
    for (const auto& F : filters) {
      auto p = filter3_to_distinct_partition(F, d);
      check(distinct_partition_to_filter3(p, d) == F && p.size() == static_cast<int>(F.size()),
            [&] { return "d=" + std::to_string(d) + ": partition round trip fails at " + set_to_string(F); });
      check(squarefree_to_distinct_partition(distinct_partition_to_squarefree(p, d), d) == p &&
                squarefree_weight(distinct_partition_to_squarefree(p, d), d) == p.size(),
            [&] { return "d=" + std::to_string(d) + ": square-free round trip fails at " + set_to_string(F); });
      parts.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < filters.size(); ++i)
      for (std::size_t j = 0; j < filters.size(); ++j) {
        const bool a = subset(filters[i], filters[j]), b = parts[i].contained_in(parts[j]);
        check(a == b, [&] { return "d=" + std::to_string(d) + ": containment of " + set_to_string(filters[i]) + ", " + set_to_string(filters[j]) + " not preserved"; });
      }
    const auto dist = filter_distribution(h);
    for (std::size_t v = 0; v < dist.size(); ++v) {
      const auto a = oracle::distinct_partition_count(static_cast<long>(v), d + 1);
      const auto b = oracle::squarefree_count(static_cast<long>(v), d);
      check(dist[v] == a && a == b, [&] {
        return "d=" + std::to_string(d) + " v=" + std::to_string(v) + ": filters " + str(dist[v]) + ", partitions " + str(a) + ", square-free " + str(b);
      });
    }

    // Filters of (E_{2,d}, divisibility) and walks.
    const HasseDiagram e(P(Family::D, 2, d));
    const auto efilters = enumerate_filters(e);
    std::vector<std::vector<int>> profiles;
    for (const auto& F : efilters) {
      const auto w = stable_filter_to_walk(F, d);
      check(walk_to_stable_filter(w, d) == F && walk_weight(w, d) == static_cast<long>(F.size()),
            [&] { return "d=" + std::to_string(d) + ": walk round trip fails at " + set_to_string(F); });
      profiles.push_back(walk_profile(w));
    }
    for (const auto& w : enumerate_walks(d + 2))
      check(stable_filter_to_walk(walk_to_stable_filter(w, d), d) == w, [&] { return "d=" + std::to_string(d) + ": walk " + w.to_string() + " not recovered"; });
    for (std::size_t i = 0; i < efilters.size(); ++i)
      for (std::size_t j = 0; j < efilters.size(); ++j) {
        bool below = true;
        for (std::size_t k = 0; k < profiles[i].size(); ++k) below = below && profiles[j][k] <= profiles[i][k];
        check(subset(efilters[i], efilters[j]) == below, [&] {
          return "d=" + std::to_string(d) + ": walk order disagrees on " + set_to_string(efilters[i]) + ", " + set_to_string(efilters[j]);
        });
      }
  }

  for (int d = 0; d <= 3; ++d) {
    const auto a = planar_partition_filter_count(d);
    const auto b = count_filters(HasseDiagram(P(Family::A, 4, d)));
    check(a == b, [&] { return "d=" + std::to_string(d) + ": " + str(a) + " planar partitions, " + str(b) + " filters of A_{4,d}"; });
  }
}

inline void acceptance_10(Checker& check, std::mt19937_64& rng) {
  auto no_violation = [&](const TermOrder& o, const Violation& v, const std::string& what) {
    check(!v, [&] { return o.to_string() + " does not refine " + what + ": " + v->first.to_string() + " < " + v->second.to_string(); });
  };
  for (int n = 1; n <= 4; ++n) {
    for (const auto& o : {TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex()}) no_violation(o, refines_A(o, n, 6), "A");
    for (int k = 0; k < 50; ++k) {
      const auto o = random_weighted_order(n, rng, k % 2 == 1);
      no_violation(o, refines_A(o, n, 6), "A");
    }
  }

  const auto e34 = monomials_up_to_degree(3, 4);
  for (std::size_t i = 0; i < e34.size(); ++i)
    for (std::size_t j = i + 1; j < e34.size(); ++j) {
      const auto& m = e34[i];
      const auto& mp = e34[j];
      if (leq_A(m, mp) || leq_A(mp, m)) continue;
      bool ok = false;
      try {
        const auto w = separating_witnesses(m, mp, 3);
        ok = compare(w.greater, m, mp) == Cmp::Greater && compare(w.less, m, mp) == Cmp::Less && !refines_A(w.greater, 3, 4) &&
             !refines_A(w.less, 3, 4);
      } catch (const error&) {
      }
      check(ok, [&] { return "no separating witnesses for " + m.to_string() + ", " + mp.to_string(); });
    }

  // Sandwich: the ordinal sum is the intersection of degree-compatible orders.
  const auto e35 = monomials_up_to_degree(3, 5);
  std::vector<TermOrder> sample{TermOrder::deglex(), TermOrder::degrevlex()};
  for (int k = 0; k < 50; ++k) sample.push_back(random_weighted_order(3, rng, true));
  for (std::size_t i = 0; i < e35.size(); ++i)
    for (std::size_t j = i + 1; j < e35.size(); ++j) {
      const auto& m = e35[i];
      const auto& mp = e35[j];
      if (ordinal_sum_leq(m, mp, 3) || ordinal_sum_leq(mp, m, 3)) continue;
      try {
        const auto w = separating_witnesses(m, mp, 3, true);
        sample.push_back(w.greater);
        sample.push_back(w.less);
      } catch (const error&) {
        check(false, [&] { return "no degree-compatible witnesses for " + m.to_string() + ", " + mp.to_string(); });
      }
    }
  for (const auto& o : sample) no_violation(o, refines_ordinal_sum(o, 3, 5), "the ordinal sum");
  for (const auto& m : e35)
    for (const auto& mp : e35) {
      const bool all = std::all_of(sample.begin(), sample.end(), [&](const TermOrder& o) { return compare(o, m, mp) != Cmp::Greater; });
      const bool want = ordinal_sum_leq(m, mp, 3);
      check(all == want, [&] {
        return m.to_string() + ", " + mp.to_string() + ": intersection says " + std::to_string(all) + ", ordinal sum " + std::to_string(want);
      });
    }
}

// ---------------------------------------------------------------------------
// Module suites

inline void suite_gaussian_ranks(Checker& check, std::mt19937_64&) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) check_rank_structure(check, n, d);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      const auto g = gaussian(a, b).coefficients;
      const auto want = oracle::gaussian_by_product(a, b);
      check(g == want, [&] { return "gaussian(" + std::to_string(a) + "," + std::to_string(b) + ") = " + join_values(g) + ", product " + join_values(want); });
    }
}

inline void suite_blattice_meet(Checker& check, std::mt19937_64&) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) check_meet_join_B(check, n, d, true);
}

inline void suite_fountains(Checker& check, std::mt19937_64&) { check_fountains(check, 12, 8); }

inline void suite_monomials(Checker& check, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3);
  auto random_monomial = [&] { return Monomial(std::vector<int>{e(rng), e(rng), e(rng), e(rng)}); };
  for (int k = 0; k < 2000; ++k) {
    const auto a = random_monomial(), b = random_monomial(), c = random_monomial();
    check(gcd(a, b) * lcm(a, b) == a * b, [&] { return "gcd*lcm != product for " + a.to_string() + ", " + b.to_string(); });
    check(divides(gcd(a, b), a) && divides(a, lcm(a, b)), [&] { return "gcd/lcm do not bound " + a.to_string() + ", " + b.to_string(); });
    check(gcd(a, gcd(b, c)) == gcd(gcd(a, b), c) && lcm(a, lcm(b, c)) == lcm(lcm(a, b), c),
          [&] { return "gcd/lcm not associative at " + a.to_string() + ", " + b.to_string() + ", " + c.to_string(); });
    check(quotient(a * b, b) == a, [&] { return "quotient fails at " + a.to_string() + ", " + b.to_string(); });
    check(parse_monomial(a.to_string()) == a, [&] { return "parse/print round trip fails at " + a.to_string(); });
    check(dual_rename(dual_rename(a, 4), 4) == a, [&] { return "dual_rename not an involution at " + a.to_string(); });
  }
  for (const auto& m : monomials_up_to_degree(4, 6)) check(xi_inverse(xi(m)) == m, [&] { return "xi round trip fails at " + m.to_string(); });
  // A is the dual-renamed image of C, degree by degree.
  for (int d = 0; d <= 4; ++d) {
    const auto g = monomials_of_degree(3, d);
    for (const auto& m : g)
      for (const auto& mp : g)
        check(leq(P(Family::C, 3, d), m, mp) == leq(P(Family::A, 3, d), dual_rename(m, 3), dual_rename(mp, 3)),
              [&] { return "C/A duality fails at " + m.to_string() + ", " + mp.to_string(); });
  }
}

inline void suite_filters(Checker& check, std::mt19937_64& rng) {
  std::vector<std::pair<PosetId, std::optional<int>>> cases;
  for (int d = 0; d <= 4; ++d) {
    cases.push_back({P(Family::A, 3, d), std::nullopt});
    cases.push_back({P(Family::B, 3, d), std::nullopt});
    cases.push_back({P(Family::D, 2, d), std::nullopt});
  }
  cases.push_back({P(Family::A, 4, 2), std::nullopt});
  cases.push_back({P(Family::C, 3, 3), std::nullopt});
  cases.push_back({P(Family::B, 4, 2), std::nullopt});
  cases.push_back({make_poset(Family::A, 3, std::nullopt), 2});
  cases.push_back({make_poset(Family::B, 3, std::nullopt), 2});
  for (const auto& [p, maxdeg] : cases) {
    const HasseDiagram h(p, maxdeg);
    const auto want = oracle::filter_distribution(oracle::Relation(p, h.vertices()));
    const auto got = filter_distribution(h);
    check(got == want, [&] { return h.label() + ": distribution " + join_values(got) + ", brute force " + join_values(want); });
    FilterCounter random_pivot(h, PivotRule::random, rng());
    check(random_pivot.distribution() == want, [&] { return h.label() + ": random pivot disagrees"; });
    const auto all = enumerate_filters(h);
    bigint total = 0;
    for (const auto& c : want) total += c;
    check(bigint(all.size()) == total, [&] { return h.label() + ": enumerated " + std::to_string(all.size()) + " filters, expected " + str(total); });
    for (const auto& F : all) check(is_filter(F, p, maxdeg), [&] { return h.label() + ": enumerated non-filter " + set_to_string(F); });
  }
}

inline void suite_ideals(Checker& check, std::mt19937_64& rng) {
  const auto pool = monomials_up_to_degree(3, 3);
  std::uniform_int_distribution<std::size_t> pick(1, pool.size() - 1);  // skip the unit
  std::uniform_int_distribution<int> how_many(1, 4);
  for (int k = 0; k < 400; ++k) {
    std::vector<Monomial> gens;
    for (int j = how_many(rng); j > 0; --j) gens.push_back(pool[pick(rng)]);
    const IdealGenerators g(gens);
    for (Family f : {Family::A, Family::B}) {
      const bool local = is_ideal_closed(g, f), degreewise = oracle::ideal_closed_degreewise(g, f);
      check(local == degreewise, [&] {
        return std::string(1, family_letter(f)) + ": " + g.to_string() + " local " + std::to_string(local) + ", degreewise " + std::to_string(degreewise);
      });
      const auto closed = borel_closure(g, f);
      bool contains = std::all_of(g.gens().begin(), g.gens().end(), [&](const Monomial& m) { return closed.contains(m); });
      check(contains && oracle::ideal_closed_degreewise(closed, f),
            [&] { return std::string(1, family_letter(f)) + "-closure of " + g.to_string() + " is " + closed.to_string(); });
    }
  }
}

using SuiteFn = void (*)(Checker&, std::mt19937_64&);

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"acceptance-1", acceptance_1},   {"acceptance-2", acceptance_2}, {"acceptance-3", acceptance_3},
      {"acceptance-4", acceptance_4},   {"acceptance-5", acceptance_5}, {"acceptance-6", acceptance_6},
      {"acceptance-7", acceptance_7},   {"acceptance-8", acceptance_8}, {"acceptance-9", acceptance_9},
      {"acceptance-10", acceptance_10}, {"gaussian-ranks", suite_gaussian_ranks}, {"blattice-meet", suite_blattice_meet},
      {"fountains", suite_fountains},   {"monomials", suite_monomials}, {"filters", suite_filters},
      {"ideals", suite_ideals},
  };
  return r;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : detail::registry()) out.push_back(name);
  return out;
}

/// Runs one named suite. Exceptions escaping a suite count as one failure.
inline VerifyReport run_suite(const std::string& name, std::uint64_t seed = default_seed) {
  const auto& r = detail::registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == name; });
  if (it == r.end()) throw parse_error("unknown suite '" + name + "'");
  VerifyReport report;
  report.suite = name;
  detail::Checker check(report);
  std::mt19937_64 rng(seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(check, rng);
  } catch (const std::exception& e) {
    check(false, [&] { return std::string("exception: ") + e.what(); });
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// "all" expands to every suite; otherwise a single suite.
inline std::vector<VerifyReport> run_suites(const std::string& name, std::uint64_t seed = default_seed) {
  std::vector<VerifyReport> out;
  if (name == "all")
    for (const auto& s : suite_names()) out.push_back(run_suite(s, seed));
  else
    out.push_back(run_suite(name, seed));
  return out;
}

}  // namespace borel
