#pragma once

/**
 * @file vector_field.hpp
 * @brief Polynomial vector fields X = X^mu d_mu on superspace.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superfield/poly.hpp"

namespace superfield {

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(SystemPtr sys) : sys_(std::move(sys)) {
    if (sys_) c_.assign(sys_->size(), Poly(sys_));
  }

  /// The coordinate field d/dx^idx.
  static VectorField partial(const SystemPtr& sys, std::size_t idx) {
    VectorField v(sys);
    v.c_.at(idx) = Poly::constant(sys, 1);
    return v;
  }
  static VectorField partial(const SystemPtr& sys, const std::string& name) {
    return partial(sys, sys->index(name));
  }

  const SystemPtr& system() const { return sys_; }
  std::size_t dim() const { return c_.size(); }
  const Poly& operator[](std::size_t mu) const { return c_[mu]; }
  Poly& operator[](std::size_t mu) { return c_[mu]; }
  const std::vector<Poly>& components() const { return c_; }

  bool is_zero() const {
    for (const auto& p : c_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// Parity of the field, or nullopt for zero / mixed fields.
  std::optional<Parity> parity() const {
    std::optional<Parity> out;
    for (std::size_t mu = 0; mu < c_.size(); ++mu) {
      for (const auto& [m, c] : c_[mu].terms()) {
        Parity p = m.parity() + sys_->parity(mu);
        if (out && *out != p) return std::nullopt;
        out = p;
      }
    }
    return out;
  }

  /// Parity of a homogeneous field; the zero field reports `fallback`.
  Parity parity_or(Parity fallback = Parity::Even) const {
    if (is_zero()) return fallback;
    auto p = parity();
    if (!p) throw Error("vector field of mixed parity");
    return *p;
  }

  VectorField& operator+=(const VectorField& o) {
    adopt(o);
    for (std::size_t mu = 0; mu < o.c_.size(); ++mu) c_[mu] += o.c_[mu];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    adopt(o);
    for (std::size_t mu = 0; mu < o.c_.size(); ++mu) c_[mu] -= o.c_[mu];
    return *this;
  }
  VectorField& operator*=(const Rational& r) {
    for (auto& p : c_) p *= r;
    return *this;
  }
  VectorField operator-() const {
    VectorField v = *this;
    for (auto& p : v.c_) p = -p;
    return v;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& r) { return a *= r; }
  friend VectorField operator*(const Rational& r, VectorField a) { return a *= r; }

  /// Left multiplication by a function: (f X)^mu = f X^mu.
  friend VectorField operator*(const Poly& f, const VectorField& x) {
    VectorField v(x.sys_ ? x.sys_ : f.system());
    if (!x.sys_) return v;
    for (std::size_t mu = 0; mu < x.c_.size(); ++mu) v.c_[mu] = f * x.c_[mu];
    return v;
  }

  friend bool operator==(const VectorField& a, const VectorField& b) {
    if (a.is_zero() && b.is_zero()) return true;
    require_same(a.sys_, b.sys_);
    for (std::size_t mu = 0; mu < a.c_.size(); ++mu)
      if (!(a.c_[mu] == b.c_[mu])) return false;
    return true;
  }

 private:
  void adopt(const VectorField& o) {
    if (!o.sys_) return;
    if (!sys_) {
      *this = VectorField(o.sys_);
    } else {
      require_same(sys_, o.sys_);
    }
  }

  SystemPtr sys_;
  std::vector<Poly> c_;
};

/// X(p) = sum_mu X^mu d_mu p.
inline Poly vf_apply(const VectorField& x, const Poly& p) {
  Poly out(p.system() ? p.system() : x.system());
  if (p.is_zero() || !x.system()) return out;
  require_same(x.system(), p.system());
  for (std::size_t mu = 0; mu < x.dim(); ++mu) {
    if (x[mu].is_zero()) continue;
    Poly d = derive(p, mu);
    if (!d.is_zero()) out += x[mu] * d;
  }
  return out;
}

/// Graded bracket [X,Y] = XY - (-)^{XY} YX.
inline VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  if (x.is_zero() || y.is_zero()) return VectorField(x.system() ? x.system() : y.system());
  require_same(x.system(), y.system());
  const Parity px = x.parity_or();
  const Parity py = y.parity_or();
  const bool both_odd = px == Parity::Odd && py == Parity::Odd;
  VectorField out(x.system());
  for (std::size_t mu = 0; mu < x.dim(); ++mu) {
    Poly a = vf_apply(x, y[mu]);
    Poly b = vf_apply(y, x[mu]);
    out[mu] = both_odd ? a + b : a - b;
  }
  return out;
}

/// div X = sum_mu (-)^{X mu + mu} d_mu X^mu.
inline Poly vf_divergence(const VectorField& x) {
  Poly out(x.system());
  if (x.is_zero()) return out;
  const int px = bit(x.parity_or());
  for (std::size_t mu = 0; mu < x.dim(); ++mu) {
    const int pm = bit(x.system()->parity(mu));
    Poly d = derive(x[mu], mu);
    if (((px * pm + pm) & 1) != 0) {
      out -= d;
    } else {
      out += d;
    }
  }
  return out;
}

/// Deformed divergence of a generating function on the (tau, u^i, th_i)
/// layout: 2(-)^f (d^2f/du^i dth_i + (u^i d_i + th_i d^i - n beta) df/dtau).
inline Poly vf_divergence_beta(const Poly& f, const std::string& tau, const std::vector<std::string>& u,
                               const std::vector<std::string>& th, const Rational& beta) {
  const auto& sys = f.system();
  if (!sys) return f;
  if (!sys->contains(tau)) throw Error("div_beta needs the odd coordinate '" + tau + "'");
  if (u.size() != th.size()) throw Error("div_beta needs matching u and theta blocks");
  const std::size_t t = sys->index(tau);
  if (sys->parity(t) != Parity::Odd) throw Error("div_beta: tau must be odd");
  const Parity pf = parity_or(f);
  Poly ft = derive(f, t);
  Poly inner(sys);
  const auto n = static_cast<long>(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::size_t ui = sys->index(u[i]);
    const std::size_t ti = sys->index(th[i]);
    inner += derive(derive(f, ti), ui);
    inner += Poly::coordinate(sys, ui) * derive(ft, ui);
    inner += Poly::coordinate(sys, ti) * derive(ft, ti);
  }
  inner -= ft * (beta * n);
  return inner * Rational(2 * sign(pf));
}

/// Z = sum_mu z_mu x^mu d_mu.
inline VectorField grading_operator(const SystemPtr& sys) {
  VectorField z(sys);
  for (std::size_t mu = 0; mu < sys->size(); ++mu)
    z[mu] = Poly::coordinate(sys, mu) * Rational(sys->weight(mu));
  return z;
}

/// Splits X into Weisfeiler-homogeneous parts: deg(X^mu term) - z_mu.
inline std::map<int, VectorField> vf_grade_decompose(const VectorField& x) {
  std::map<int, VectorField> parts;
  if (!x.system()) return parts;
  for (std::size_t mu = 0; mu < x.dim(); ++mu) {
    const int z = x.system()->weight(mu);
    for (const auto& [m, c] : x[mu].terms()) {
      auto [it, fresh] = parts.try_emplace(static_cast<int>(m.degree) - z, x.system());
      it->second[mu].add_term(m, c);
    }
  }
  return parts;
}

/// Degree of a homogeneous nonzero field.
inline std::optional<int> vf_degree(const VectorField& x) {
  auto parts = vf_grade_decompose(x);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

/// Canonical text "c*m*d/d<name> + ..."; components in coordinate order.
inline std::string to_string(const VectorField& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t mu = 0; mu < x.dim(); ++mu) {
    const auto& name = (*x.system())[mu].name;
    for (const auto& [m, c] : x[mu].terms()) {
      Rational a = abs(c);
      const bool neg = sgn(c) < 0;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      if (a != 1) out += a.get_str() + "*";
      if (!m.is_one()) out += monomial_to_string(*x.system(), m) + "*";
      out += "d/d" + name;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const VectorField& x) { return os << to_string(x); }

}  // namespace superfield
