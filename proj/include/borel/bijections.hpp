#pragma once

// Correspondences between filters and partition-like objects: distinct
// partitions and square-free monomials for A_{3,d}, lattice walks for
// divisibility filters of E_{2,d}, coin fountains for small stable
// filters, and planar partitions for A_{4,d}.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "filters.hpp"
#include "monomial.hpp"
#include "orders.hpp"
#include "poset.hpp"
#include "young.hpp"

namespace borel {

// ---------------------------------------------------------------------------
// Young diagrams

/// Drop the first column of a diagram with exactly v rows.
inline FerrersDiagram remove_first_column(const FerrersDiagram& f, std::size_t v) {
  if (f.num_rows() != v)
    throw precondition_error("diagram " + f.to_string() + " does not have exactly " + std::to_string(v) + " rows");
  std::vector<int> rows;
  for (int r : f.rows())
    if (r > 1) rows.push_back(r - 1);
  return FerrersDiagram(std::move(rows));
}

// ---------------------------------------------------------------------------
// Distinct partitions and square-free monomials

class DistinctPartition {
 public:
  DistinctPartition() = default;

  DistinctPartition(std::vector<int> parts, int bound) : parts_(std::move(parts)), bound_(bound) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw precondition_error("partition parts must be positive");
      if (parts_[k] > bound_) throw precondition_error("part " + std::to_string(parts_[k]) + " exceeds " + std::to_string(bound_));
      if (k > 0 && parts_[k] >= parts_[k - 1]) throw precondition_error("parts must be strictly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int bound() const { return bound_; }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// Young-diagram containment.
  bool contained_in(const DistinctPartition& o) const {
    if (parts_.size() > o.parts_.size()) return false;
    for (std::size_t k = 0; k < parts_.size(); ++k)
      if (parts_[k] > o.parts_[k]) return false;
    return true;
  }

  friend bool operator==(const DistinctPartition&, const DistinctPartition&) = default;

 private:
  std::vector<int> parts_;
  int bound_ = 0;
};

/// Strictly decreasing partitions of v with parts <= bound.
inline std::vector<DistinctPartition> distinct_partitions(int v, int bound) {
  std::vector<DistinctPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur, bound);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p - 1);
      cur.pop_back();
    }
  };
  if (v >= 0) rec(v, bound);
  return out;
}

/// Layer sizes #(F ∩ x_3^i M_{d-i}^2), i = 0..d, as a distinct partition.
inline DistinctPartition filter3_to_distinct_partition(const MonomialSet& F, int d) {
  if (!is_filter(F, make_poset(Family::A, 3, d))) throw precondition_error("not a filter of A[n=3,d=" + std::to_string(d) + "]");
  std::vector<int> sizes(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& m : F) ++sizes[static_cast<std::size_t>(m[3])];
  std::vector<int> parts;
  for (int s : sizes)
    if (s > 0) parts.push_back(s);
  return DistinctPartition(std::move(parts), d + 1);
}

/// Inverse: part p_i selects the p_i largest (in x_1 exponent) elements
/// of layer i.
inline MonomialSet distinct_partition_to_filter3(const DistinctPartition& p, int d) {
  if (!p.parts().empty() && p.parts().front() > d + 1) throw precondition_error("part exceeds d+1");
  MonomialSet F;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    const int layer = d - static_cast<int>(i);
    const int take = p.parts()[i];
    for (int a = layer; a > layer - take; --a) F.insert(Monomial{a, layer - a, static_cast<int>(i)});
  }
  return F;
}

/// Part w becomes the variable x_{d+2-w}.
inline Monomial distinct_partition_to_squarefree(const DistinctPartition& p, int d) {
  Monomial m;
  for (int w : p.parts()) {
    if (w > d + 1) throw precondition_error("part " + std::to_string(w) + " exceeds d+1");
    m = m.times_variable(d + 2 - w);
  }
  return m;
}

inline DistinctPartition squarefree_to_distinct_partition(const Monomial& m, int d) {
  if (m.max_supp() > d + 1) throw precondition_error(m.to_string() + " uses a variable beyond x" + std::to_string(d + 1));
  std::vector<int> parts;
  for (int i = 1; i <= m.max_supp(); ++i) {
    if (m[i] > 1) throw precondition_error(m.to_string() + " is not square-free");
    if (m[i] == 1) parts.push_back(d + 2 - i);
  }
  return DistinctPartition(std::move(parts), d + 1);
}

/// Weight of a square-free monomial on x_1..x_{d+1}, x_i weighing d+2-i.
inline int squarefree_weight(const Monomial& m, int d) {
  int w = 0;
  for (int i = 1; i <= m.max_supp(); ++i) w += m[i] * (d + 2 - i);
  return w;
}

// ---------------------------------------------------------------------------
// Lattice walks

enum class Step { Down, Right };

/// Unit-step walk from (0,k) to (k,0) that never leaves x + y <= k.
class LatticeWalk {
 public:
  LatticeWalk(std::vector<Step> steps, int k) : steps_(std::move(steps)), k_(k) {
    int x = 0, y = k;
    for (Step s : steps_) {
      if (s == Step::Down) --y;
      else ++x;
      if (y < 0 || x + y > k) throw precondition_error("walk leaves E_{2," + std::to_string(k) + "}");
    }
    if (x != k || y != 0) throw precondition_error("walk does not end at (" + std::to_string(k) + ",0)");
  }

  const std::vector<Step>& steps() const { return steps_; }
  int size() const { return k_; }

  /// Run-length form, e.g. "D4 R3 D1 R2".
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < steps_.size();) {
      std::size_t j = k;
      while (j < steps_.size() && steps_[j] == steps_[k]) ++j;
      if (!s.empty()) s += ' ';
      s += (steps_[k] == Step::Down ? 'D' : 'R') + std::to_string(j - k);
      k = j;
    }
    return s;
  }

  friend bool operator==(const LatticeWalk&, const LatticeWalk&) = default;

 private:
  std::vector<Step> steps_;
  int k_;
};

/// Parse "D4 R3 D1 ..." (run lengths optional: "DDRR" also works).
inline LatticeWalk parse_walk(std::string_view text, int k) {
  std::vector<Step> steps;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i++];
    if (c == ' ' || c == ',') continue;
    if (c != 'D' && c != 'R') throw parse_error(std::string("unexpected '") + c + "' in walk");
    int count = 0;
    bool digits = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      count = count * 10 + (text[i++] - '0');
      digits = true;
    }
    steps.insert(steps.end(), static_cast<std::size_t>(digits ? count : 1), c == 'D' ? Step::Down : Step::Right);
  }
  return LatticeWalk(std::move(steps), k);
}

/// Points of E_{2,d} are x_1^a x_2^b = (a, b).
inline LatticeWalk stable_filter_to_walk(const MonomialSet& F, int d) {
  if (!is_filter(F, make_poset(Family::D, 2, d))) throw precondition_error("not a divisibility filter of E_{2," + std::to_string(d) + "}");
  const int k = d + 2;
  std::vector<Step> steps;
  int y = k;
  for (int a = 0; a <= d + 1; ++a) {
    int target = d + 1 - a;  // just outside E_{2,d} when column a is empty
    for (int b = 0; b <= d - a; ++b)
      if (F.count(Monomial{a, b})) {
        target = b;
        break;
      }
    steps.insert(steps.end(), static_cast<std::size_t>(y - target), Step::Down);
    y = target;
    steps.push_back(Step::Right);
  }
  return LatticeWalk(std::move(steps), k);
}

/// The divisibility filter of E_{2,d} generated by the visited points.
inline MonomialSet walk_to_stable_filter(const LatticeWalk& w, int d) {
  if (w.size() != d + 2) throw precondition_error("walk does not live in E_{2," + std::to_string(d + 2) + "}");
  MonomialSet F;
  int x = 0, y = d + 2;
  auto visit = [&] {
    if (x + y > d) return;
    for (int a = x; a <= d; ++a)
      for (int b = y; a + b <= d; ++b) F.insert(Monomial{a, b});
  };
  for (Step s : w.steps()) {
    if (s == Step::Down) --y;
    else ++x;
    visit();
  }
  return F;
}

/// Sum of d+2-a-b over the vertical steps (a,b) -> (a,b-1).
inline long walk_weight(const LatticeWalk& w, int d) {
  long total = 0;
  int x = 0, y = w.size();
  for (Step s : w.steps()) {
    if (s == Step::Down) {
      total += d + 2 - x - y;
      --y;
    } else {
      ++x;
    }
  }
  return total;
}

inline std::vector<LatticeWalk> enumerate_walks(int k) {
  std::vector<LatticeWalk> out;
  std::vector<Step> cur;
  std::function<void(int, int)> rec = [&](int x, int y) {
    if (x == k && y == 0) {
      out.emplace_back(cur, k);
      return;
    }
    if (y > 0) {
      cur.push_back(Step::Down);
      rec(x, y - 1);
      cur.pop_back();
    }
    if (x + 1 + y <= k) {
      cur.push_back(Step::Right);
      rec(x + 1, y);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(0, k);
  return out;
}

/// Number of walks from (0,k) to (k,0) inside E_{2,k}, by dynamic programming.
inline bigint count_walks(int k) {
  if (k < 0) return 0;
  // ways[x][y]: walks from (x,y) to (k,0).
  std::vector<std::vector<bigint>> ways(static_cast<std::size_t>(k) + 1, std::vector<bigint>(static_cast<std::size_t>(k) + 1, 0));
  for (int x = k; x >= 0; --x)
    for (int y = 0; x + y <= k; ++y) {
      auto& w = ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (x == k && y == 0) {
        w = 1;
        continue;
      }
      if (y > 0) w += ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
      if (x + 1 + y <= k) w += ways[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(y)];
    }
  return ways[0][static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Fountains

/// Rows of coin positions. Row 0 is 0..k-1; a coin at position p in row
/// r > 0 rests on coins p and p+1 of row r-1.
class Fountain {
 public:
  Fountain() = default;

  explicit Fountain(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto& row = rows_[r];
      std::sort(row.begin(), row.end());
      if (row.empty()) throw precondition_error("fountain rows must be non-empty");
      if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw precondition_error("duplicate coin in fountain row");
      if (r == 0) {
        for (std::size_t k = 0; k < row.size(); ++k)
          if (row[k] != static_cast<int>(k)) throw precondition_error("fountain bottom row must be contiguous from 0");
        continue;
      }
      const auto& below = rows_[r - 1];
      for (int p : row)
        if (!std::binary_search(below.begin(), below.end(), p) || !std::binary_search(below.begin(), below.end(), p + 1))
          throw precondition_error("fountain coin is not supported by two coins");
    }
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int bottom() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }

  int coins() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
  }

  friend bool operator==(const Fountain&, const Fountain&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

inline void for_each_fountain(int w, const std::function<void(const Fountain&)>& emit) {
  if (w < 0) throw precondition_error("fountain size must be non-negative");
  if (w == 0) {
    emit(Fountain{});
    return;
  }
  std::vector<std::vector<int>> rows;
  std::function<void(int)> place = [&](int left) {
    if (left == 0) {
      emit(Fountain(rows));
      return;
    }
    const auto& below = rows.back();
    std::vector<int> slots;
    for (std::size_t k = 0; k + 1 < below.size(); ++k)
      if (below[k + 1] == below[k] + 1) slots.push_back(below[k]);
    const std::size_t n = slots.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) row.push_back(slots[k]);
      if (static_cast<int>(row.size()) > left) continue;
      rows.push_back(std::move(row));
      place(left - static_cast<int>(rows.back().size()));
      rows.pop_back();
    }
  };
  for (int k = 1; k <= w; ++k) {
    std::vector<int> bottom(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) bottom[static_cast<std::size_t>(p)] = p;
    rows.assign(1, bottom);
    place(w - k);
  }
}

inline std::vector<Fountain> enumerate_fountains(int w) {
  std::vector<Fountain> out;
  for_each_fountain(w, [&](const Fountain& f) { out.push_back(f); });
  return out;
}

inline bigint count_fountains(int w) {
  bigint n = 0;
  for_each_fountain(w, [&](const Fountain&) { ++n; });
  return n;
}

/// Coefficients a_0..a_N of 1/(1 - z/(1 - z^2/(1 - z^3/...))), truncated
/// at depth N+1 (deeper levels only touch z^{N+1} and beyond).
inline std::vector<bigint> fountain_gf_coefficients(int N) {
  if (N < 0) throw precondition_error("fountain_gf_coefficients needs N >= 0");
  const std::size_t len = static_cast<std::size_t>(N) + 1;
  std::vector<bigint> f(len, 0);
  f[0] = 1;
  for (int j = N + 1; j >= 1; --j) {
    // g = 1 - z^j f ; f <- 1/g
    std::vector<bigint> g(len, 0);
    g[0] = 1;
    for (std::size_t k = 0; k + static_cast<std::size_t>(j) < len; ++k) g[k + static_cast<std::size_t>(j)] -= f[k];
    std::vector<bigint> inv(len, 0);
    inv[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
      bigint s = 0;
      for (std::size_t i = 1; i <= k; ++i) s += g[i] * inv[k - i];
      inv[k] = -s;
    }
    f = std::move(inv);
  }
  return f;
}

/// Stable filters of cardinality w in M_d^3 for any d > w, computed on
/// B_{3,w+1}.
inline bigint limit_filter_count(int w) {
  if (w < 0) throw precondition_error("limit_filter_count needs w >= 0");
  return count_filters(HasseDiagram(make_poset(Family::B, 3, w + 1)), w);
}

// ---------------------------------------------------------------------------
// Planar partitions

/// Cells (r,c) of a diagram whose right and lower neighbours are also cells.
inline FerrersDiagram diagram_interior(const FerrersDiagram& f) {
  std::vector<int> rows;
  for (std::size_t r = 0; r < f.num_rows(); ++r) {
    int len = std::min(f.row(r) - 1, f.row(r + 1));
    if (len > 0) rows.push_back(len);
  }
  return FerrersDiagram(std::move(rows));
}

/// Heights pi_{i,j}, weakly decreasing along rows and columns.
class PlanarPartition {
 public:
  PlanarPartition() = default;

  explicit PlanarPartition(std::vector<std::vector<int>> heights) : heights_(std::move(heights)) {
    for (std::size_t i = 0; i < heights_.size(); ++i)
      for (std::size_t j = 0; j < heights_[i].size(); ++j) {
        if (heights_[i][j] < 0) throw precondition_error("negative height");
        if (j > 0 && heights_[i][j] > heights_[i][j - 1]) throw precondition_error("heights must decrease along rows");
        if (i > 0 && heights_[i][j] > height(i - 1, j)) throw precondition_error("heights must decrease along columns");
      }
  }

  int height(std::size_t i, std::size_t j) const {
    return i < heights_.size() && j < heights_[i].size() ? heights_[i][j] : 0;
  }

  const std::vector<std::vector<int>>& heights() const { return heights_; }

  /// Level k: cells with height > k, as a diagram.
  FerrersDiagram level(int k) const {
    std::vector<int> rows;
    for (std::size_t i = 0; i < heights_.size(); ++i) {
      int len = 0;
      while (static_cast<std::size_t>(len) < heights_[i].size() && heights_[i][static_cast<std::size_t>(len)] > k) ++len;
      if (len > 0) rows.push_back(len);
    }
    return FerrersDiagram(std::move(rows));
  }

  /// Every level has distinct rows of length <= d+1, at most d+1 levels,
  /// and each level lies in the interior of the one below.
  bool fits(int d) const {
    int top = 0;
    for (const auto& row : heights_)
      for (int h : row) top = std::max(top, h);
    if (top > d + 1) return false;
    for (int k = 0; k < top; ++k) {
      auto lv = level(k);
      if (lv.num_columns() > d + 1) return false;
      for (std::size_t r = 1; r < lv.num_rows(); ++r)
        if (lv.row(r) == lv.row(r - 1)) return false;
      if (k > 0 && !lv.contained_in(diagram_interior(level(k - 1)))) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<int>> heights_;
};

/// Number of planar partitions in the (d+1)^3 box whose levels are
/// distinct-part partitions, each inside the interior of the level below.
inline bigint planar_partition_filter_count(int d, int cap_degree = 8) {
  if (d < 0) throw precondition_error("planar_partition_filter_count needs d >= 0");
  if (d > cap_degree) throw cap_exceeded("planar partition count is capped at d = " + std::to_string(cap_degree));
  std::vector<DistinctPartition> all;
  for (int v = 1; v <= (d + 1) * (d + 2) / 2; ++v)
    for (auto& p : distinct_partitions(v, d + 1)) all.push_back(std::move(p));
  auto diagram = [](const DistinctPartition& p) { return FerrersDiagram(p.parts()); };
  std::map<std::vector<int>, bigint> memo;
  std::function<bigint(const DistinctPartition&)> stacks = [&](const DistinctPartition& base) -> bigint {
    if (auto it = memo.find(base.parts()); it != memo.end()) return it->second;
    const auto inner = diagram_interior(diagram(base));
    bigint n = 1;  // nothing on top
    for (const auto& p : all)
      if (diagram(p).contained_in(inner)) n += stacks(p);
    memo.emplace(base.parts(), n);
    return n;
  };
  bigint total = 1;  // the empty partition
  for (const auto& p : all) total += stacks(p);
  return total;
}

}  // namespace borel
