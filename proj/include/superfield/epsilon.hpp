#pragma once

/**
 * @file epsilon.hpp
 * @brief Totally antisymmetric symbols as lookup tables.
 *
 * Indices are zero based. Upper and lower symbols with all-distinct indices
 * equal the permutation sign, except in two dimensions where the sl(2)
 * convention is eps^{12} = eps_{21} = +1 (so eps_{12} = -1).
 */

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "superfield/rational.hpp"

namespace superfield {

class EpsilonTable {
 public:
  explicit EpsilonTable(int n) : n_(n) {
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) size *= static_cast<std::size_t>(n);
    table_.assign(size, 0);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    fill(perm, 0, 1);
  }

  int dim() const { return n_; }

  int operator()(std::initializer_list<int> idx) const {
    std::size_t flat = 0;
    for (int i : idx) flat = flat * n_ + static_cast<std::size_t>(i);
    return table_[flat];
  }

  int at(const int* idx) const {
    std::size_t flat = 0;
    for (int k = 0; k < n_; ++k) flat = flat * n_ + static_cast<std::size_t>(idx[k]);
    return table_[flat];
  }

 private:
  void fill(std::vector<int>& perm, int pos, int sign) {
    if (pos == n_) {
      std::size_t flat = 0;
      for (int i : perm) flat = flat * n_ + static_cast<std::size_t>(i);
      table_[flat] = static_cast<std::int8_t>(sign);
      return;
    }
    for (int k = pos; k < n_; ++k) {
      std::swap(perm[pos], perm[k]);
      fill(perm, pos + 1, k == pos ? sign : -sign);
      std::swap(perm[pos], perm[k]);
    }
  }

  int n_;
  std::vector<std::int8_t> table_;
};

inline const EpsilonTable& epsilon_table(int n) {
  static const EpsilonTable e3(3), e4(4), e5(5), e6(6);
  switch (n) {
    case 3: return e3;
    case 4: return e4;
    case 5: return e5;
    case 6: return e6;
    default: throw Error("no epsilon table for dimension " + std::to_string(n));
  }
}

inline int eps3(int i, int j, int k) { return epsilon_table(3)({i, j, k}); }
inline int eps5(int i, int j, int k, int l, int m) { return epsilon_table(5)({i, j, k, l, m}); }
inline int eps6(int a, int b, int c, int d, int e, int f) {
  return epsilon_table(6)({a, b, c, d, e, f});
}

/// eps^{ab} with eps^{12} = +1.
inline int eps2_up(int a, int b) {
  static constexpr std::array<std::array<int, 2>, 2> t{{{0, 1}, {-1, 0}}};
  return t[a][b];
}

/// eps_{ab} with eps_{21} = +1.
inline int eps2_down(int a, int b) {
  static constexpr std::array<std::array<int, 2>, 2> t{{{0, -1}, {1, 0}}};
  return t[a][b];
}

inline int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace superfield
