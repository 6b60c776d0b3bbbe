#pragma once

// Monomials in the variables x1, x2, x3, ... as dense exponent vectors.
//
// A Monomial is stored in canonical form: trailing zero exponents are
// stripped, so the same value lives in M^n for every n >= max_supp().
// Exponent i of the public API is 1-based (x_i), matching the usual
// notation; the storage is 0-based.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace borel {

class Monomial {
 public:
  using exponent_type = int;

  Monomial() = default;

  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {
    for (auto e : exps_)
      if (e < 0) throw precondition_error("negative exponent in monomial");
    strip();
  }

  Monomial(std::initializer_list<exponent_type> exps)
      : Monomial(std::vector<exponent_type>(exps)) {}

  /// x_i^e
  static Monomial variable(int i, exponent_type e = 1) {
    if (i < 1) throw precondition_error("variable index must be >= 1");
    std::vector<exponent_type> v(static_cast<std::size_t>(i), 0);
    v.back() = e;
    return Monomial(std::move(v));
  }

  /// Exponent of x_i; zero for every index beyond the support.
  exponent_type operator[](int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > exps_.size()) return 0;
    return exps_[static_cast<std::size_t>(i - 1)];
  }

  std::span<const exponent_type> exponents() const { return exps_; }

  /// Exponent vector padded with zeros to length n.
  std::vector<exponent_type> exponents(int n) const {
    if (n < max_supp())
      throw ground_set_error("monomial " + to_string() + " has support beyond x" +
                             std::to_string(n));
    std::vector<exponent_type> v(exps_);
    v.resize(static_cast<std::size_t>(n), 0);
    return v;
  }

  /// Largest i with x_i dividing the monomial, 0 for the unit.
  int max_supp() const { return static_cast<int>(exps_.size()); }

  bool is_unit() const { return exps_.empty(); }

  long total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

  Monomial operator*(const Monomial& o) const {
    std::vector<exponent_type> v(std::max(exps_.size(), o.exps_.size()), 0);
    for (std::size_t k = 0; k < exps_.size(); ++k) v[k] += exps_[k];
    for (std::size_t k = 0; k < o.exps_.size(); ++k) v[k] += o.exps_[k];
    return Monomial(std::move(v));
  }

  /// Multiply by x_to / x_from. Requires x_from | *this.
  Monomial moved(int from, int to) const {
    if ((*this)[from] == 0) throw precondition_error("x" + std::to_string(from) + " does not divide " + to_string());
    auto v = exps_;
    if (static_cast<std::size_t>(to) > v.size()) v.resize(static_cast<std::size_t>(to), 0);
    --v[static_cast<std::size_t>(from - 1)];
    ++v[static_cast<std::size_t>(to - 1)];
    return Monomial(std::move(v));
  }

  Monomial times_variable(int i, exponent_type e = 1) const { return *this * variable(i, e); }

  Monomial pow(exponent_type k) const {
    auto v = exps_;
    for (auto& e : v) e *= k;
    return Monomial(std::move(v));
  }

  /// Compact text form: `x1^2*x3`, `1` for the unit.
  std::string to_string() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      if (exps_[k] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(k + 1);
      if (exps_[k] != 1) out += '^' + std::to_string(exps_[k]);
    }
    return out;
  }

  // Storage order (lexicographic on canonical vectors). Not any of the
  // partial orders in this library; it exists for sorted containers.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  void strip() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  }

  std::vector<exponent_type> exps_;
};

inline long total_degree(const Monomial& m) { return m.total_degree(); }

inline int max_supp(const Monomial& m) { return m.max_supp(); }

/// m | mp
inline bool divides(const Monomial& m, const Monomial& mp) {
  if (m.max_supp() > mp.max_supp()) return false;
  for (int i = 1; i <= m.max_supp(); ++i)
    if (m[i] > mp[i]) return false;
  return true;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> v(static_cast<std::size_t>(std::min(a.max_supp(), b.max_supp())));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::min(a[static_cast<int>(k) + 1], b[static_cast<int>(k) + 1]);
  return Monomial(std::move(v));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> v(static_cast<std::size_t>(std::max(a.max_supp(), b.max_supp())));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::max(a[static_cast<int>(k) + 1], b[static_cast<int>(k) + 1]);
  return Monomial(std::move(v));
}

/// Exact quotient a / b. Requires b | a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw precondition_error(b.to_string() + " does not divide " + a.to_string());
  std::vector<int> v(a.exponents().begin(), a.exponents().end());
  for (int i = 1; i <= b.max_supp(); ++i) v[static_cast<std::size_t>(i - 1)] -= b[i];
  return Monomial(std::move(v));
}

/// All monomials one strongly stable step above m: (x_i/x_j)·m with
/// i < j and x_j | m. Sorted, without duplicates.
inline std::vector<Monomial> moves_strong_up(const Monomial& m) {
  std::vector<Monomial> out;
  for (int j = 2; j <= m.max_supp(); ++j) {
    if (m[j] == 0) continue;
    for (int i = 1; i < j; ++i) out.push_back(m.moved(j, i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All monomials one stable step above m: only the last variable of
/// the support may be replaced.
inline std::vector<Monomial> moves_stable_up(const Monomial& m) {
  std::vector<Monomial> out;
  const int k = m.max_supp();
  for (int i = 1; i < k; ++i) out.push_back(m.moved(k, i));
  std::sort(out.begin(), out.end());
  return out;
}

/// All monomials one strongly stable step below m inside M^n:
/// (x_j/x_i)·m with i < j <= n and x_i | m.
inline std::vector<Monomial> moves_strong_down(const Monomial& m, int n) {
  std::vector<Monomial> out;
  for (int i = 1; i < n; ++i) {
    if (m[i] == 0) continue;
    for (int j = i + 1; j <= n; ++j) out.push_back(m.moved(i, j));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// α_1 + 2α_2 + ... + nα_n; every strongly stable up-move lowers it.
inline long f_potential(const Monomial& m) {
  long f = 0;
  for (int i = 1; i <= m.max_supp(); ++i) f += static_cast<long>(i) * m[i];
  return f;
}

/// (−deg, f), compared lexicographically. Strictly decreases under
/// multiplication by a variable and under up-moves.
inline std::pair<long, long> g_potential(const Monomial& m) {
  return {-m.total_degree(), f_potential(m)};
}

/// M_d^n in lexicographically descending exponent order (x1^d first).
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n < 1 || d < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // Recursive fill of e[k..n) with total `left`, largest first.
  std::function<void(int, int)> fill = [&](int k, int left) {
    if (k == n - 1) {
      e[static_cast<std::size_t>(k)] = left;
      out.emplace_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(k)] = a;
      fill(k + 1, left - a);
    }
    e[static_cast<std::size_t>(k)] = 0;
  };
  fill(0, d);
  return out;
}

/// E_{n,d}: all monomials in n variables of degree <= d, graded
/// (degree ascending) and lexicographically descending within a degree.
inline std::vector<Monomial> monomials_up_to_degree(int n, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Binomial coefficient as a machine integer; used for ground-set sizes.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Parse `x1^2*x3`, `1`, or an exponent array `[2,0,1]`.
inline Monomial parse_monomial(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto read_uint = [&](std::string_view& s, const char* what) -> long {
    s = trim(s);
    std::size_t k = 0;
    long v = 0;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
      v = v * 10 + (s[k] - '0');
      if (v > 1'000'000) throw parse_error(std::string(what) + " too large");
      ++k;
    }
    if (k == 0) throw parse_error(std::string("expected ") + what + " in monomial");
    s.remove_prefix(k);
    return v;
  };

  std::string_view s = trim(text);
  if (s.empty()) throw parse_error("empty monomial");
  if (s == "1") return Monomial{};
  if (s.front() == '[') {
    if (s.back() != ']') throw parse_error("unterminated exponent array");
    s = trim(s.substr(1, s.size() - 2));
    std::vector<int> e;
    while (!s.empty()) {
      e.push_back(static_cast<int>(read_uint(s, "exponent")));
      s = trim(s);
      if (s.empty()) break;
      if (s.front() != ',') throw parse_error("expected ',' in exponent array");
      s.remove_prefix(1);
    }
    return Monomial(std::move(e));
  }

  Monomial m;
  while (true) {
    s = trim(s);
    if (s.empty() || s.front() != 'x') throw parse_error("expected x<k> in monomial '" + std::string(text) + "'");
    s.remove_prefix(1);
    long k = read_uint(s, "variable index");
    if (k < 1) throw parse_error("variable index must be >= 1");
    long e = 1;
    s = trim(s);
    if (!s.empty() && s.front() == '^') {
      s.remove_prefix(1);
      e = read_uint(s, "exponent");
    }
    m = m * Monomial::variable(static_cast<int>(k), static_cast<int>(e));
    s = trim(s);
    if (s.empty()) break;
    if (s.front() != '*') throw parse_error("expected '*' in monomial '" + std::string(text) + "'");
    s.remove_prefix(1);
  }
  return m;
}

}  // namespace borel

template <>
struct std::hash<borel::Monomial> {
  std::size_t operator()(const borel::Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
