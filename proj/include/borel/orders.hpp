#pragma once

// Comparability for the divisibility order D, the strongly stable
// orders A, the stable orders B and the dual orders C.
//
// A is decided through the partial-sum encoding xi(): m <= m' in A iff
// xi(m) <= xi(m') pointwise. B has no such encoding; on a fixed degree
// it is decided from a reachability table built once per (n, d) by a
// topological sweep over the stable-move DAG, and across degrees by a
// pruned search interleaving multiplication and stable moves.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "error.hpp"
#include "monomial.hpp"
#include "young.hpp"

namespace borel {

// ---------------------------------------------------------------------------
// XiSequence

/// Weakly increasing, eventually constant sequence N+ -> N, stored as a
/// finite prefix plus the constant tail value. Canonical form drops
/// trailing prefix entries equal to the tail.
class XiSequence {
 public:
  XiSequence() = default;

  XiSequence(std::vector<long> prefix, long tail) : prefix_(std::move(prefix)), tail_(tail) {
    if (tail_ < 0) throw precondition_error("xi sequence values must be non-negative");
    for (std::size_t k = 0; k < prefix_.size(); ++k) {
      if (prefix_[k] < 0) throw precondition_error("xi sequence values must be non-negative");
      if (k > 0 && prefix_[k] < prefix_[k - 1]) throw precondition_error("xi sequence must be weakly increasing");
    }
    if (!prefix_.empty() && prefix_.back() > tail_) throw precondition_error("xi sequence prefix exceeds its tail");
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
  }

  const std::vector<long>& prefix() const { return prefix_; }
  long tail() const { return tail_; }

  /// Value at position k (1-based).
  long at(std::size_t k) const { return k >= 1 && k <= prefix_.size() ? prefix_[k - 1] : tail_; }

  /// Pointwise <=.
  bool dominated_by(const XiSequence& o) const {
    if (tail_ > o.tail_) return false;
    const std::size_t len = std::max(prefix_.size(), o.prefix_.size());
    for (std::size_t k = 1; k <= len; ++k)
      if (at(k) > o.at(k)) return false;
    return true;
  }

  static XiSequence pointwise_min(const XiSequence& a, const XiSequence& b) {
    return combine(a, b, [](long x, long y) { return std::min(x, y); });
  }
  static XiSequence pointwise_max(const XiSequence& a, const XiSequence& b) {
    return combine(a, b, [](long x, long y) { return std::max(x, y); });
  }

  std::string to_string() const {
    std::string s = "(";
    for (long v : prefix_) s += std::to_string(v) + ",";
    return s + std::to_string(tail_) + ",...)";
  }

  friend bool operator==(const XiSequence&, const XiSequence&) = default;

 private:
  template <class Op>
  static XiSequence combine(const XiSequence& a, const XiSequence& b, Op op) {
    const std::size_t len = std::max(a.prefix_.size(), b.prefix_.size());
    std::vector<long> p(len);
    for (std::size_t k = 1; k <= len; ++k) p[k - 1] = op(a.at(k), b.at(k));
    return XiSequence(std::move(p), op(a.tail_, b.tail_));
  }

  std::vector<long> prefix_;
  long tail_ = 0;
};

/// Partial sums (α1, α1+α2, ...), eventually the total degree.
inline XiSequence xi(const Monomial& m) {
  std::vector<long> p;
  long s = 0;
  for (auto e : m.exponents()) p.push_back(s += e);
  return XiSequence(std::move(p), s);
}

inline Monomial xi_inverse(const XiSequence& s) {
  std::vector<int> e;
  long prev = 0;
  for (long v : s.prefix()) {
    e.push_back(static_cast<int>(v - prev));
    prev = v;
  }
  e.push_back(static_cast<int>(s.tail() - prev));
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// PosetId

enum class Family { D, A, B, C };

inline char family_letter(Family f) {
  switch (f) {
    case Family::D: return 'D';
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  return '?';
}

/// Names one of the posets on (subsets of) monomials. An absent field
/// means "unbounded" (written `*`). For D a finite degree bounds the
/// total degree from above, so D[n=2,d=3] is E_{2,3} under divisibility.
/// For A, B and C a finite degree fixes the total degree.
struct PosetId {
  Family family = Family::A;
  std::optional<int> nvars;
  std::optional<int> degree;

  bool finite() const { return nvars.has_value() && degree.has_value(); }

  std::string to_string() const {
    std::string s(1, family_letter(family));
    if (!nvars && !degree) return family == Family::D ? s : s + "[*,*]";
    s += '[';
    s += nvars ? "n=" + std::to_string(*nvars) : "*";
    s += ',';
    s += degree ? "d=" + std::to_string(*degree) : "*";
    return s + ']';
  }

  friend bool operator==(const PosetId&, const PosetId&) = default;
};

inline PosetId make_poset(Family f, std::optional<int> n, std::optional<int> d) {
  if (n && *n < 1) throw precondition_error("poset needs at least one variable");
  if (d && *d < 0) throw precondition_error("poset degree must be non-negative");
  return PosetId{f, n, d};
}

/// Syntax: `A[n=3,d=4]`, `B[n=3]`, `D`, `A[*,d=4]`, `A[*,*]`, `C[n=3,d=2]`.
/// Positional `*` stands for n (first) or d (second).
inline PosetId parse_poset(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty poset id");
  PosetId p;
  switch (s[0]) {
    case 'A': p.family = Family::A; break;
    case 'B': p.family = Family::B; break;
    case 'C': p.family = Family::C; break;
    case 'D': p.family = Family::D; break;
    default: throw parse_error("unknown poset family in '" + std::string(text) + "'");
  }
  if (s.size() == 1) return p;
  if (s[1] != '[' || s.back() != ']') throw parse_error("malformed poset id '" + std::string(text) + "'");
  std::string body = s.substr(2, s.size() - 3);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    parts.push_back(body.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() > 2) throw parse_error("too many poset parameters in '" + std::string(text) + "'");
  auto number = [&](const std::string& v) {
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw parse_error("bad poset parameter '" + v + "'");
    return std::stoi(v);
  };
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& a = parts[k];
    if (a == "*" || a.empty()) continue;
    if (a.rfind("n=", 0) == 0) {
      p.nvars = number(a.substr(2));
    } else if (a.rfind("d=", 0) == 0) {
      p.degree = number(a.substr(2));
    } else if (k == 0) {
      p.nvars = number(a);
    } else {
      p.degree = number(a);
    }
  }
  return make_poset(p.family, p.nvars, p.degree);
}

inline bool in_ground_set(const PosetId& p, const Monomial& m) {
  if (p.nvars && m.max_supp() > *p.nvars) return false;
  if (p.degree) {
    if (p.family == Family::D) return m.total_degree() <= *p.degree;
    return m.total_degree() == *p.degree;
  }
  return true;
}

inline void require_ground(const PosetId& p, const Monomial& m) {
  if (!in_ground_set(p, m))
    throw ground_set_error(m.to_string() + " is not in the ground set of " + p.to_string());
}

/// Reverse the exponent vector within a window of length n.
inline Monomial dual_rename(const Monomial& m, int n) {
  if (n < 1) throw precondition_error("rename window must be positive");
  auto e = m.exponents(n);  // throws if the window is too small
  std::reverse(e.begin(), e.end());
  return Monomial(std::move(e));
}

/// Antitone bijection M^v -> xi(M_v): a_1 zeroes, a_2 ones, ..., a_v
/// copies of v-1, then the constant v.
inline XiSequence tau(const Monomial& m, int v) {
  if (v < 1) throw precondition_error("tau needs v >= 1");
  if (m.max_supp() > v) throw ground_set_error(m.to_string() + " has support beyond x" + std::to_string(v));
  std::vector<long> p;
  for (int i = 1; i <= v; ++i)
    for (int k = 0; k < m[i]; ++k) p.push_back(i - 1);
  return XiSequence(std::move(p), v);
}

inline Monomial tau_inverse(const XiSequence& s, int v) {
  if (s.tail() != v) throw precondition_error("sequence is not in xi(M_v)");
  std::vector<int> e(static_cast<std::size_t>(v), 0);
  for (long b : s.prefix()) {
    if (b < 0 || b >= v) throw precondition_error("sequence is not in xi(M_v)");
    ++e[static_cast<std::size_t>(b)];
  }
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// Stable-order reachability on a fixed degree

/// Vertices of M_d^n with, for each vertex, the bitset of everything at
/// or above it in B_{n,d}. Immutable after construction.
class StableReachability {
 public:
  static constexpr std::size_t default_cap = 20000;

  StableReachability(int n, int d, std::size_t cap = default_cap) : n_(n), d_(d) {
    if (binomial_u64(static_cast<std::uint64_t>(n + d - 1), static_cast<std::uint64_t>(d)) > cap)
      throw cap_exceeded("B[n=" + std::to_string(n) + ",d=" + std::to_string(d) + "] exceeds the reachability cap");
    vertices_ = monomials_of_degree(n, d);
    // Up-moves lower f, so ascending f is a topological order from the top.
    std::stable_sort(vertices_.begin(), vertices_.end(),
                     [](const Monomial& a, const Monomial& b) { return f_potential(a) < f_potential(b); });
    for (std::size_t k = 0; k < vertices_.size(); ++k) index_.emplace(vertices_[k], k);
    up_.assign(vertices_.size(), boost::dynamic_bitset<>(vertices_.size()));
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      up_[k].set(k);
      for (const auto& u : moves_stable_up(vertices_[k])) up_[k] |= up_[index_.at(u)];
    }
  }

  int nvars() const { return n_; }
  int degree() const { return d_; }
  const std::vector<Monomial>& vertices() const { return vertices_; }
  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw ground_set_error(m.to_string() + " is not in M_" + std::to_string(d_) + "^" + std::to_string(n_));
    return it->second;
  }
  const boost::dynamic_bitset<>& up_set(std::size_t k) const { return up_[k]; }

  bool leq(const Monomial& m, const Monomial& mp) const { return up_[index_of(m)].test(index_of(mp)); }

 private:
  int n_, d_;
  std::vector<Monomial> vertices_;
  std::unordered_map<Monomial, std::size_t> index_;
  std::vector<boost::dynamic_bitset<>> up_;
};

/// Shared, lazily built table for B_{n,d}. Safe to call concurrently.
inline std::shared_ptr<const StableReachability> stable_reachability(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const StableReachability>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_shared<const StableReachability>(n, d);
  return slot;
}

// ---------------------------------------------------------------------------
// leq

inline bool leq_A(const Monomial& m, const Monomial& mp) { return xi(m).dominated_by(xi(mp)); }

inline int effective_nvars(const PosetId& p, const Monomial& m, const Monomial& mp) {
  return p.nvars ? *p.nvars : std::max({1, m.max_supp(), mp.max_supp()});
}

namespace detail {

// B_{n,.}: search upward from m through stable moves and multiplication
// by x_1..x_n. Every such step is also an A-step, so nodes that are not
// A-below the target are pruned; degree is bounded by the target's.
inline bool stable_leq_mixed_degree(int n, const Monomial& m, const Monomial& mp) {
  if (m.total_degree() > mp.total_degree() || !leq_A(m, mp)) return false;
  if (m.total_degree() == mp.total_degree())
    return stable_reachability(n, static_cast<int>(mp.total_degree()))->leq(m, mp);
  std::unordered_set<Monomial> seen{m};
  std::queue<Monomial> todo;
  todo.push(m);
  while (!todo.empty()) {
    Monomial c = std::move(todo.front());
    todo.pop();
    if (c == mp) return true;
    auto next = moves_stable_up(c);
    for (int i = 1; i <= n; ++i) next.push_back(c.times_variable(i));
    for (auto& u : next) {
      if (u.total_degree() > mp.total_degree() || !leq_A(u, mp)) continue;
      if (seen.insert(u).second) todo.push(std::move(u));
    }
  }
  return false;
}

}  // namespace detail

/// m <= mp in the poset p. Both arguments must lie in its ground set.
inline bool leq(const PosetId& p, const Monomial& m, const Monomial& mp) {
  require_ground(p, m);
  require_ground(p, mp);
  switch (p.family) {
    case Family::D:
      return divides(m, mp);
    case Family::A:
      return leq_A(m, mp);
    case Family::C:
      if (p.nvars) return leq_A(dual_rename(m, *p.nvars), dual_rename(mp, *p.nvars));
      return monomial_to_young(m).contained_in(monomial_to_young(mp));
    case Family::B: {
      const int n = effective_nvars(p, m, mp);
      if (p.degree) return stable_reachability(n, *p.degree)->leq(m, mp);
      return detail::stable_leq_mixed_degree(n, m, mp);
    }
  }
  return false;
}

/// Generating up-steps of p from m, not yet restricted to a degree bound.
/// Needs a finite number of variables.
inline std::vector<Monomial> generating_moves_up(const PosetId& p, const Monomial& m) {
  if (!p.nvars) throw precondition_error("generating moves need a finite number of variables");
  const int n = *p.nvars;
  std::vector<Monomial> out;
  switch (p.family) {
    case Family::A: out = moves_strong_up(m); break;
    case Family::B: out = moves_stable_up(m); break;
    case Family::C: out = moves_strong_down(m, n); break;
    case Family::D: break;
  }
  if (p.family == Family::D || !p.degree)
    for (int i = 1; i <= n; ++i) out.push_back(m.times_variable(i));
  return out;
}

/// Enumerate the ground set of a finite poset, or the degree truncation
/// `max_degree` of an unbounded-degree one.
inline std::vector<Monomial> ground_set(const PosetId& p, std::optional<int> max_degree = std::nullopt) {
  if (!p.nvars) throw precondition_error("ground set needs a finite number of variables: " + p.to_string());
  if (p.degree) {
    if (p.family == Family::D) return monomials_up_to_degree(*p.nvars, *p.degree);
    return monomials_of_degree(*p.nvars, *p.degree);
  }
  if (!max_degree) throw precondition_error(p.to_string() + " is infinite; give a degree truncation");
  return monomials_up_to_degree(*p.nvars, *max_degree);
}

}  // namespace borel
