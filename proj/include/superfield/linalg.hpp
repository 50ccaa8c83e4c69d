#pragma once

/**
 * @file linalg.hpp
 * @brief Sparse exact linear algebra over the rationals.
 *
 * RowSpace keeps a fully reduced row-echelon basis: each row's pivot is its
 * smallest column, pivots are 1, and no row has an entry in another row's
 * pivot column. Pivot choice is therefore deterministic and the reduced
 * basis of a space is unique, so two spaces are equal iff their RowSpaces
 * hold identical rows.
 */

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "superfield/rational.hpp"

namespace superfield {

/// Sorted (column, value) pairs with nonzero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// a + s*b.
inline SparseVec axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + s * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline SparseVec from_map(const std::map<int, Rational>& m) {
  SparseVec v;
  for (const auto& [k, c] : m)
    if (!is_zero(c)) v.emplace_back(k, c);
  return v;
}

class RowSpace {
 public:
  std::size_t rank() const { return rows_.size(); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

  /// Remainder of v modulo the space (zero at every pivot column).
  SparseVec reduce(SparseVec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      Rational s = -v[pos].second;
      v = axpy(v, s, it->second);
      // Everything before pos is untouched because rows start at their pivot.
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Adds v; returns false if it was already in the span.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const int pivot = v.front().first;
    Rational inv = 1 / v.front().second;
    if (inv != 1)
      for (auto& [k, c] : v) c *= inv;
    for (auto& [p, row] : rows_) {
      auto hit = std::lower_bound(row.begin(), row.end(), pivot,
                                  [](const auto& e, int col) { return e.first < col; });
      if (hit != row.end() && hit->first == pivot) {
        Rational s = -hit->second;
        row = axpy(row, s, v);
      }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  /// Null space of the rows over columns [0, n): one vector per free column.
  std::vector<SparseVec> nullspace(int n) const {
    std::vector<std::map<int, Rational>> cols(static_cast<std::size_t>(n));
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (const auto& [p, row] : rows_) {
      if (p >= n) throw Error("row space wider than the declared column count");
      is_pivot[p] = true;
      for (const auto& [k, c] : row)
        if (k != p) cols[k][p] = -c;
    }
    std::vector<SparseVec> out;
    for (int f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      auto m = cols[f];
      m[f] = 1;
      out.push_back(from_map(m));
    }
    return out;
  }

  friend bool operator==(const RowSpace& a, const RowSpace& b) { return a.rows_ == b.rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

/// Reduced echelon basis of the span of vs.
inline RowSpace span_of(const std::vector<SparseVec>& vs) {
  RowSpace r;
  for (const auto& v : vs) r.insert(v);
  return r;
}

inline std::size_t rank_of(const std::vector<SparseVec>& vs) { return span_of(vs).rank(); }

}  // namespace superfield
