#pragma once

/**
 * @file poly.hpp
 * @brief Sparse supercommutative polynomials with exact rational coefficients.
 *
 * A monomial is an exponent vector over the even coordinates together with a
 * set of odd coordinates (a bitmask). The odd factors are always written in
 * declaration order, so every term has a unique normal form and the sign of
 * a product is the parity of the number of transpositions needed to merge
 * the two odd sets.
 */

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superfield/coords.hpp"
#include "superfield/rational.hpp"

namespace superfield {

struct Monomial {
  // Weisfeiler degree; first member so that the default ordering is graded.
  std::uint16_t degree = 0;
  std::array<std::uint8_t, kMaxEven> exps{};
  std::uint64_t odd = 0;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  Parity parity() const { return parity_of(std::popcount(odd)); }
  bool is_one() const { return odd == 0 && degree == 0; }
};

namespace detail {

/// Sign of (left odd set) * (right odd set) brought to canonical order.
inline int merge_sign(std::uint64_t left, std::uint64_t right) {
  int swaps = 0;
  while (right != 0) {
    int b = std::countr_zero(right);
    right &= right - 1;
    std::uint64_t above = b >= 63 ? 0 : (left >> (b + 1));
    swaps += std::popcount(above);
  }
  return (swaps & 1) != 0 ? -1 : 1;
}

}  // namespace detail

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(SystemPtr sys) : sys_(std::move(sys)) {}

  static Poly constant(SystemPtr sys, const Rational& c) {
    Poly p(std::move(sys));
    if (!superfield::is_zero(c)) p.terms_.emplace(Monomial{}, c);
    return p;
  }

  static Poly coordinate(const SystemPtr& sys, std::size_t idx) {
    if (!sys || idx >= sys->size()) throw Error("coordinate index out of range");
    Poly p(sys);
    Monomial m;
    const int s = sys->slot(idx);
    if (sys->parity(idx) == Parity::Even) {
      m.exps[s] = 1;
    } else {
      m.odd = std::uint64_t{1} << s;
    }
    m.degree = static_cast<std::uint16_t>(sys->weight(idx));
    p.terms_.emplace(m, Rational(1));
    return p;
  }

  static Poly coordinate(const SystemPtr& sys, const std::string& name) {
    return coordinate(sys, sys->index(name));
  }

  static Poly from_term(SystemPtr sys, const Monomial& m, const Rational& c) {
    Poly p(std::move(sys));
    if (!superfield::is_zero(c)) p.terms_.emplace(m, c);
    return p;
  }

  const SystemPtr& system() const { return sys_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a monomial (zero if absent).
  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Constant term.
  Rational constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const Rational& c) {
    if (superfield::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (superfield::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& r) {
    if (superfield::is_zero(r)) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= r;
    }
    return *this;
  }
  Poly operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
  friend Poly operator*(const Rational& r, Poly a) { return a *= r; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    require_same(a.sys_, b.sys_);
    return a.terms_ == b.terms_;
  }

  /// Reinterprets the polynomial in a system whose even/odd slots extend
  /// this one (used to embed functions into the form system).
  Poly rebased(SystemPtr sys) const {
    Poly p(std::move(sys));
    p.terms_ = terms_;
    return p;
  }

 private:
  void adopt(const Poly& o) {
    if (!sys_) {
      sys_ = o.sys_;
    } else {
      require_same(sys_, o.sys_);
    }
  }

  SystemPtr sys_;
  Terms terms_;
};

/// Koszul-signed product of two monomials; returns std::nullopt when an odd
/// coordinate repeats.
inline std::optional<std::pair<Monomial, int>> monomial_mul(const Monomial& a, const Monomial& b) {
  if ((a.odd & b.odd) != 0) return std::nullopt;
  Monomial m;
  for (int k = 0; k < kMaxEven; ++k) {
    const int e = a.exps[k] + b.exps[k];
    if (e > 255) throw Error("exponent overflow");
    m.exps[k] = static_cast<std::uint8_t>(e);
  }
  m.odd = a.odd | b.odd;
  m.degree = static_cast<std::uint16_t>(a.degree + b.degree);
  return std::make_pair(m, detail::merge_sign(a.odd, b.odd));
}

inline Poly operator*(const Poly& a, const Poly& b) {
  require_same(a.sys_, b.sys_);
  Poly out(a.sys_ ? a.sys_ : b.sys_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = monomial_mul(ma, mb);
      if (!prod) continue;
      Rational c = ca * cb;
      if (prod->second < 0) c = -c;
      out.add_term(prod->first, c);
    }
  }
  return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

/// Left partial derivative with respect to coordinate idx.
inline Poly derive(const Poly& p, std::size_t idx) {
  const auto& sys = p.system();
  Poly out(sys);
  if (p.is_zero()) return out;
  if (!sys || idx >= sys->size()) throw Error("derivative with respect to an unknown coordinate");
  const int s = sys->slot(idx);
  const int w = sys->weight(idx);
  if (sys->parity(idx) == Parity::Even) {
    for (const auto& [m, c] : p.terms()) {
      if (m.exps[s] == 0) continue;
      Monomial n = m;
      n.exps[s] -= 1;
      n.degree = static_cast<std::uint16_t>(n.degree - w);
      out.add_term(n, c * m.exps[s]);
    }
  } else {
    const std::uint64_t mask = std::uint64_t{1} << s;
    for (const auto& [m, c] : p.terms()) {
      if ((m.odd & mask) == 0) continue;
      Monomial n = m;
      n.odd &= ~mask;
      n.degree = static_cast<std::uint16_t>(n.degree - w);
      const int before = std::popcount(m.odd & (mask - 1));
      out.add_term(n, (before & 1) != 0 ? Rational(-c) : c);
    }
  }
  return out;
}

inline Poly derive(const Poly& p, const std::string& name) {
  if (!p.system()) return p;
  return derive(p, p.system()->index(name));
}

/// Common parity and Weisfeiler degree of the terms of a polynomial.
struct GradingInfo {
  bool zero = true;
  std::set<Parity> parities;
  std::set<int> degrees;

  std::optional<Parity> parity() const {
    if (parities.size() == 1) return *parities.begin();
    return std::nullopt;
  }
  std::optional<int> degree() const {
    if (degrees.size() == 1) return *degrees.begin();
    return std::nullopt;
  }
  bool homogeneous_parity() const { return parities.size() <= 1; }
};

inline GradingInfo parity_and_degree(const Poly& p) {
  GradingInfo g;
  for (const auto& [m, c] : p.terms()) {
    g.zero = false;
    g.parities.insert(m.parity());
    g.degrees.insert(m.degree);
  }
  return g;
}

/// Parity of a homogeneous polynomial; zero is reported as `fallback`.
inline Parity parity_or(const Poly& p, Parity fallback = Parity::Even) {
  auto g = parity_and_degree(p);
  if (g.zero) return fallback;
  if (auto par = g.parity()) return *par;
  throw Error("polynomial of mixed parity");
}

/// Part of p of Weisfeiler degree d.
inline Poly degree_part(const Poly& p, int d) {
  Poly out(p.system());
  for (const auto& [m, c] : p.terms())
    if (m.degree == d) out.add_term(m, c);
  return out;
}

/// Replaces the even coordinate idx by factor * idx.
inline Poly rescale_even(const Poly& p, std::size_t idx, const Rational& factor) {
  const auto& sys = p.system();
  if (p.is_zero()) return p;
  if (sys->parity(idx) != Parity::Even) throw Error("rescale_even on an odd coordinate");
  const int s = sys->slot(idx);
  Poly out(sys);
  for (const auto& [m, c] : p.terms()) {
    Rational f = 1;
    for (int e = 0; e < m.exps[s]; ++e) f *= factor;
    out.add_term(m, c * f);
  }
  return out;
}

/// Rewrites p in another system by mapping coordinate indices. Terms that
/// involve an unmapped coordinate raise an error.
inline Poly transport(const Poly& p, const SystemPtr& target, const std::vector<std::optional<std::size_t>>& map) {
  Poly out(target);
  const auto& sys = p.system();
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (int k = 0; k < sys->n_even(); ++k) {
      if (m.exps[k] == 0) continue;
      auto dst = map[sys->even_coord(k)];
      if (!dst) throw Error("transport: coordinate '" + (*sys)[sys->even_coord(k)].name + "' has no image");
      Poly x = Poly::coordinate(target, *dst);
      for (int e = 0; e < m.exps[k]; ++e) term = term * x;
    }
    for (int k = 0; k < sys->n_odd(); ++k) {
      if ((m.odd >> k & 1U) == 0) continue;
      auto dst = map[sys->odd_coord(k)];
      if (!dst) throw Error("transport: coordinate '" + (*sys)[sys->odd_coord(k)].name + "' has no image");
      term = term * Poly::coordinate(target, *dst);
    }
    out += term;
  }
  return out;
}

/// All monomials of Weisfeiler degree d, in monomial order.
inline std::vector<Monomial> monomials_of_degree(const CoordinateSystem& sys, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  // Odd part first (each odd coordinate at most once), then even exponents.
  auto evens = [&](auto&& self, int k, int left) -> void {
    if (k == sys.n_even()) {
      if (left == 0) {
        cur.degree = static_cast<std::uint16_t>(d);
        out.push_back(cur);
      }
      return;
    }
    const int w = sys.even_weight(k);
    for (int e = 0; e * w <= left; ++e) {
      cur.exps[k] = static_cast<std::uint8_t>(e);
      self(self, k + 1, left - e * w);
    }
    cur.exps[k] = 0;
  };
  auto odds = [&](auto&& self, int k, int left) -> void {
    if (k == sys.n_odd()) {
      evens(evens, 0, left);
      return;
    }
    self(self, k + 1, left);
    const int w = sys.odd_weight(k);
    if (w <= left) {
      cur.odd |= std::uint64_t{1} << k;
      self(self, k + 1, left - w);
      cur.odd &= ~(std::uint64_t{1} << k);
    }
  };
  odds(odds, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical text of a monomial, e.g. "u1^2*th12*th34"; "1" for the unit.
inline std::string monomial_to_string(const CoordinateSystem& sys, const Monomial& m) {
  std::string s;
  auto push = [&s](const std::string& f) {
    if (!s.empty()) s += "*";
    s += f;
  };
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const int slot = sys.slot(i);
    if (sys.parity(i) == Parity::Even) {
      const int e = m.exps[slot];
      if (e == 0) continue;
      push(e == 1 ? sys[i].name : sys[i].name + "^" + std::to_string(e));
    } else if ((m.odd >> slot & 1U) != 0) {
      push(sys[i].name);
    }
  }
  return s.empty() ? "1" : s;
}

/// Canonical text of a polynomial in the monomial order; "0" when zero.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += monomial_to_string(*p.system(), m);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& x) { return os << to_string(x); }

}  // namespace superfield
