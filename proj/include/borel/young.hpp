#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"

namespace borel {

/// A Ferrers (Young) diagram given by its weakly decreasing row lengths.
class FerrersDiagram {
 public:
  FerrersDiagram() = default;

  explicit FerrersDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k] <= 0) throw precondition_error("Ferrers rows must be positive");
      if (k > 0 && rows_[k] > rows_[k - 1]) throw precondition_error("Ferrers rows must be weakly decreasing");
    }
  }

  const std::vector<int>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  int num_columns() const { return rows_.empty() ? 0 : rows_.front(); }
  bool empty() const { return rows_.empty(); }

  int size() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
  }

  /// Row k (0-based); zero past the last row.
  int row(std::size_t k) const { return k < rows_.size() ? rows_[k] : 0; }

  /// Cell containment order of the Young lattice.
  bool contained_in(const FerrersDiagram& o) const {
    if (rows_.size() > o.rows_.size()) return false;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (rows_[k] > o.rows_[k]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(rows_[k]);
    }
    return s + "]";
  }

  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;
  friend auto operator<=>(const FerrersDiagram&, const FerrersDiagram&) = default;

 private:
  std::vector<int> rows_;
};

/// α_n rows of length n, α_{n-1} rows of length n-1, ..., α_1 rows of length 1.
inline FerrersDiagram monomial_to_young(const Monomial& m) {
  std::vector<int> rows;
  for (int i = m.max_supp(); i >= 1; --i)
    for (int k = 0; k < m[i]; ++k) rows.push_back(i);
  return FerrersDiagram(std::move(rows));
}

inline Monomial young_to_monomial(const FerrersDiagram& f) {
  std::vector<int> e(static_cast<std::size_t>(f.num_columns()), 0);
  for (int r : f.rows()) ++e[static_cast<std::size_t>(r - 1)];
  return Monomial(std::move(e));
}

}  // namespace borel
