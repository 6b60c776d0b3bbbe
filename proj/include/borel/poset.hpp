#pragma once

// Finite posets on monomials: vertex lists, cover relations and the
// full order relation as bitsets.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "error.hpp"
#include "monomial.hpp"
#include "orders.hpp"

namespace borel {

using Bitset = boost::dynamic_bitset<>;

/// Vertices are ordered by degree ascending, then lexicographically
/// descending exponent vector.
class HasseDiagram {
 public:
  static constexpr std::size_t default_cap = 50000;
  static constexpr std::size_t relation_cap = 20000;

  HasseDiagram(PosetId p, std::optional<int> max_degree = std::nullopt, std::size_t cap = default_cap)
      : poset_(p), max_degree_(p.degree ? std::nullopt : max_degree) {
    if (!p.nvars) throw precondition_error("Hasse diagram needs a finite number of variables");
    if (!p.degree && !max_degree) throw precondition_error(p.to_string() + " is infinite; give --max-degree");
    const int n = *p.nvars;
    const int top = p.degree ? *p.degree : *max_degree;
    std::uint64_t size = p.degree && p.family != Family::D
                             ? binomial_u64(static_cast<std::uint64_t>(n + top - 1), static_cast<std::uint64_t>(top))
                             : binomial_u64(static_cast<std::uint64_t>(n + top), static_cast<std::uint64_t>(top));
    if (size > cap)
      throw cap_exceeded(p.to_string() + " has " + std::to_string(size) + " elements, above the cap of " + std::to_string(cap));
    vertices_ = ground_set(p, max_degree);
    for (std::size_t k = 0; k < vertices_.size(); ++k) index_.emplace(vertices_[k], k);
    upper_.resize(vertices_.size());
    lower_.resize(vertices_.size());

    if (p.family == Family::B) {
      build_by_reduction();
    } else {
      for (std::size_t k = 0; k < vertices_.size(); ++k)
        for (const auto& u : explicit_covers(vertices_[k])) add_cover(k, u);
    }
    std::sort(covers_.begin(), covers_.end());
    for (auto& v : upper_) std::sort(v.begin(), v.end());
    for (auto& v : lower_) std::sort(v.begin(), v.end());
  }

  const PosetId& poset() const { return poset_; }
  std::optional<int> max_degree() const { return max_degree_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Monomial>& vertices() const { return vertices_; }
  const Monomial& vertex(std::size_t k) const { return vertices_.at(k); }

  /// (lower, upper) index pairs, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t k) const { return upper_.at(k); }
  const std::vector<std::size_t>& lower_covers(std::size_t k) const { return lower_.at(k); }

  bool contains(const Monomial& m) const { return index_.count(m) != 0; }

  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw ground_set_error(m.to_string() + " is not a vertex of " + label());
    return it->second;
  }

  std::string label() const {
    auto s = poset_.to_string();
    if (max_degree_) s += " up to degree " + std::to_string(*max_degree_);
    return s;
  }

  /// up_sets()[k] holds every j with vertex k <= vertex j (k included).
  const std::vector<Bitset>& up_sets() const {
    ensure_relation();
    return up_;
  }
  /// down_sets()[k] holds every j with vertex j <= vertex k.
  const std::vector<Bitset>& down_sets() const {
    ensure_relation();
    return down_;
  }

  bool leq_index(std::size_t a, std::size_t b) const { return up_sets()[a].test(b); }

  /// Vertex indices in an order where every vertex precedes its upper covers.
  std::vector<std::size_t> topological_order() const {
    std::vector<std::size_t> indeg(size()), order;
    for (std::size_t k = 0; k < size(); ++k) indeg[k] = lower_[k].size();
    for (std::size_t k = 0; k < size(); ++k)
      if (indeg[k] == 0) order.push_back(k);
    for (std::size_t h = 0; h < order.size(); ++h)
      for (auto u : upper_[order[h]])
        if (--indeg[u] == 0) order.push_back(u);
    if (order.size() != size()) throw structure_error("cover graph has a cycle");
    return order;
  }

 private:
  void add_cover(std::size_t lo, const Monomial& up) {
    auto it = index_.find(up);
    if (it == index_.end()) return;  // leaves a truncation
    covers_.emplace_back(lo, it->second);
    upper_[lo].push_back(it->second);
    lower_[it->second].push_back(lo);
  }

  // Covers of A, C and D are known in closed form: adjacent variable
  // swaps, plus the multiplication that raises the last partial sum.
  std::vector<Monomial> explicit_covers(const Monomial& m) const {
    const int n = *poset_.nvars;
    std::vector<Monomial> out;
    switch (poset_.family) {
      case Family::A:
        for (int i = 1; i < n; ++i)
          if (m[i + 1] > 0) out.push_back(m.moved(i + 1, i));
        if (!poset_.degree) out.push_back(m.times_variable(n));
        break;
      case Family::C:
        for (int i = 1; i < n; ++i)
          if (m[i] > 0) out.push_back(m.moved(i, i + 1));
        if (!poset_.degree) out.push_back(m.times_variable(1));
        break;
      case Family::D:
        for (int i = 1; i <= n; ++i) out.push_back(m.times_variable(i));
        break;
      case Family::B:
        break;
    }
    return out;
  }

  // B has no closed-form covers: a generating step v -> u is a cover iff
  // no other generating step from v reaches something below u.
  void build_by_reduction() {
    const std::size_t N = size();
    if (N > relation_cap) throw cap_exceeded(label() + " is too large for the reachability relation");
    std::vector<std::vector<std::size_t>> succ(N);
    for (std::size_t k = 0; k < N; ++k) {
      for (const auto& u : generating_moves_up(poset_, vertices_[k])) {
        auto it = index_.find(u);
        if (it != index_.end()) succ[k].push_back(it->second);
      }
      std::sort(succ[k].begin(), succ[k].end());
      succ[k].erase(std::unique(succ[k].begin(), succ[k].end()), succ[k].end());
    }
    compute_closure(succ);
    for (std::size_t k = 0; k < N; ++k) {
      for (auto u : succ[k]) {
        bool cover = true;
        for (auto w : succ[k])
          if (w != u && up_[w].test(u)) {
            cover = false;
            break;
          }
        if (cover) add_cover(k, vertices_[u]);
      }
    }
  }

  void compute_closure(const std::vector<std::vector<std::size_t>>& succ) const {
    const std::size_t N = size();
    std::vector<std::size_t> indeg(N), order;
    for (std::size_t k = 0; k < N; ++k)
      for (auto u : succ[k]) ++indeg[u];
    for (std::size_t k = 0; k < N; ++k)
      if (indeg[k] == 0) order.push_back(k);
    for (std::size_t h = 0; h < order.size(); ++h)
      for (auto u : succ[order[h]])
        if (--indeg[u] == 0) order.push_back(u);
    if (order.size() != N) throw structure_error("generating relation has a cycle");
    up_.assign(N, Bitset(N));
    down_.assign(N, Bitset(N));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      up_[*it].set(*it);
      for (auto u : succ[*it]) up_[*it] |= up_[u];
    }
    for (std::size_t k = 0; k < N; ++k)
      for (auto j = up_[k].find_first(); j != Bitset::npos; j = up_[k].find_next(j)) down_[j].set(k);
    have_relation_ = true;
  }

  void ensure_relation() const {
    std::call_once(*relation_once_, [this] {
      if (have_relation_) return;
      if (size() > relation_cap) throw cap_exceeded(label() + " is too large for the order relation");
      compute_closure(upper_);
    });
  }

  PosetId poset_;
  std::optional<int> max_degree_;
  std::vector<Monomial> vertices_;
  std::unordered_map<Monomial, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> upper_, lower_;
  mutable std::vector<Bitset> up_, down_;
  mutable bool have_relation_ = false;
  std::unique_ptr<std::once_flag> relation_once_ = std::make_unique<std::once_flag>();
};

inline HasseDiagram build_hasse(const PosetId& p, std::optional<int> max_degree = std::nullopt,
                                std::size_t cap = HasseDiagram::default_cap) {
  return HasseDiagram(p, max_degree, cap);
}

}  // namespace borel
