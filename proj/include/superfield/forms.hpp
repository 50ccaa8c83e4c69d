#pragma once

/**
 * @file forms.hpp
 * @brief Differential forms, Lie derivatives, pairings and Pfaff certificates.
 *
 * A form is a polynomial over the form system of its base coordinates: dx^mu
 * is one more coordinate whose parity is that of x^mu flipped. Because base
 * odd slots precede differential odd slots, every canonical term reads
 * (function part)(differential part) with no extra sign.
 */

#include <string>
#include <vector>

#include "superfield/vector_field.hpp"

namespace superfield {

class DiffForm {
 public:
  DiffForm() = default;
  explicit DiffForm(SystemPtr base) : base_(std::move(base)), p_(base_ ? base_->forms() : SystemPtr{}) {}
  DiffForm(SystemPtr base, Poly p) : base_(std::move(base)), p_(std::move(p)) {}

  /// A function viewed as a 0-form.
  static DiffForm function(const Poly& f) { return {f.system(), f.rebased(f.system()->forms())}; }

  /// The exact differential dx^mu.
  static DiffForm dx(const SystemPtr& base, std::size_t mu) {
    return {base, Poly::coordinate(base->forms(), base->differential(mu))};
  }
  static DiffForm dx(const SystemPtr& base, const std::string& name) { return dx(base, base->index(name)); }

  const SystemPtr& base() const { return base_; }
  const Poly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  DiffForm& operator+=(const DiffForm& o) {
    adopt(o);
    p_ += o.p_;
    return *this;
  }
  DiffForm& operator-=(const DiffForm& o) {
    adopt(o);
    p_ -= o.p_;
    return *this;
  }
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(DiffForm a, const Rational& r) {
    a.p_ *= r;
    return a;
  }
  friend DiffForm operator*(const Rational& r, DiffForm a) { return a * r; }
  DiffForm operator-() const { return {base_, -p_}; }

  /// Graded product of forms.
  friend DiffForm operator*(const DiffForm& a, const DiffForm& b) {
    require_same(a.base_, b.base_);
    return {a.base_ ? a.base_ : b.base_, a.p_ * b.p_};
  }
  /// Function times form, function on the left.
  friend DiffForm operator*(const Poly& f, const DiffForm& w) {
    if (f.is_zero() || w.is_zero()) return DiffForm(w.base_ ? w.base_ : f.system());
    return function(f) * w;
  }

  friend bool operator==(const DiffForm& a, const DiffForm& b) { return a.p_ == b.p_; }

 private:
  void adopt(const DiffForm& o) {
    if (!base_) *this = DiffForm(o.base_, p_.rebased(o.p_.system()));
  }

  SystemPtr base_;
  Poly p_;
};

inline DiffForm form_mul(const DiffForm& a, const DiffForm& b) { return a * b; }

/// Number of differentials in each term (the form degree); -1 if mixed.
inline int form_degree(const DiffForm& w) {
  if (w.is_zero()) return 0;
  const auto& base = *w.base();
  const auto& fs = *base.forms();
  int out = -2;
  for (const auto& [m, c] : w.poly().terms()) {
    int k = 0;
    for (std::size_t mu = 0; mu < base.size(); ++mu) {
      const std::size_t d = base.differential(mu);
      const int s = fs.slot(d);
      k += fs.parity(d) == Parity::Even ? m.exps[s] : static_cast<int>(m.odd >> s & 1U);
    }
    if (out == -2) {
      out = k;
    } else if (out != k) {
      return -1;
    }
  }
  return out;
}

/// Coefficients w_mu of a one-form w = sum_mu w_mu dx^mu (function on the left).
inline std::vector<Poly> one_form_coefficients(const DiffForm& w) {
  const auto& base = w.base();
  std::vector<Poly> out(base->size(), Poly(base));
  const auto& fs = *base->forms();
  for (const auto& [m, c] : w.poly().terms()) {
    Monomial rest = m;
    std::optional<std::size_t> which;
    for (std::size_t mu = 0; mu < base->size(); ++mu) {
      const std::size_t d = base->differential(mu);
      const int s = fs.slot(d);
      const bool present = fs.parity(d) == Parity::Even ? m.exps[s] != 0 : (m.odd >> s & 1U) != 0;
      if (!present) continue;
      if (which || (fs.parity(d) == Parity::Even && m.exps[s] != 1)) throw Error("not a one-form");
      which = mu;
      if (fs.parity(d) == Parity::Even) {
        rest.exps[s] = 0;
      } else {
        rest.odd &= ~(std::uint64_t{1} << s);
      }
      rest.degree = static_cast<std::uint16_t>(rest.degree - fs.weight(d));
    }
    if (!which) throw Error("not a one-form");
    out[*which].add_term(rest, c);
  }
  return out;
}

enum class LieConvention {
  /// L_X dx^mu = (-)^{(X+mu+nu)nu} d_nu X^mu dx^nu.
  Paper,
  /// L_X d = (-)^X d L_X with d = dx^nu d_nu acting from the left.
  CommutesWithD,
};

/// X extended to the form system as a derivation.
inline VectorField lift_to_forms(const VectorField& x, LieConvention conv = LieConvention::Paper) {
  const auto& base = x.system();
  const auto& fs = base->forms();
  VectorField out(fs);
  if (x.is_zero()) return out;
  const int px = bit(x.parity_or());
  const std::size_t n = base->size();
  for (std::size_t mu = 0; mu < n; ++mu) {
    out[mu] = x[mu].rebased(fs);
    const int pm = bit(base->parity(mu));
    Poly comp(fs);
    for (std::size_t nu = 0; nu < n; ++nu) {
      Poly d = derive(x[mu], nu);
      if (d.is_zero()) continue;
      const int pn = bit(base->parity(nu));
      int e = (px + pm + pn) * pn;
      if (conv == LieConvention::CommutesWithD) e = px + (pn + 1) * (px + pm + pn);
      Poly term = d.rebased(fs) * Poly::coordinate(fs, base->differential(nu));
      if ((e & 1) != 0) {
        comp -= term;
      } else {
        comp += term;
      }
    }
    out[base->differential(mu)] = comp;
  }
  return out;
}

inline DiffForm form_lie_derivative(const VectorField& x, const DiffForm& w,
                                    LieConvention conv = LieConvention::Paper) {
  if (w.is_zero() || x.is_zero()) return DiffForm(w.base() ? w.base() : x.system());
  require_same(x.system(), w.base());
  return {w.base(), vf_apply(lift_to_forms(x, conv), w.poly())};
}

/// <X, w> for a one-form w, with <d_mu, dx^nu> = delta and the sign of moving
/// d_mu past the coefficient w_mu.
inline Poly pairing(const VectorField& x, const DiffForm& w) {
  Poly out(x.system());
  if (w.is_zero()) return out;
  auto coeffs = one_form_coefficients(w);
  for (std::size_t mu = 0; mu < coeffs.size(); ++mu) {
    if (coeffs[mu].is_zero() || x[mu].is_zero()) continue;
    const Poly term = x[mu] * coeffs[mu];
    const int pm = bit(x.system()->parity(mu));
    if (pm != 0 && parity_or(coeffs[mu]) == Parity::Odd) {
      out -= term;
    } else {
      out += term;
    }
  }
  return out;
}

/// A one-form together with the differential whose coefficient determines
/// the multiplier (dt, du^i or dvartheta^a).
struct PfaffForm {
  std::string name;
  DiffForm form;
  std::size_t leading = 0;
};

struct PfaffCertificate {
  /// multipliers[i][j] = f^i_j in L_X alpha^i = f^i_j alpha^j.
  std::vector<std::vector<Poly>> multipliers;
  std::vector<DiffForm> residuals;

  bool ok() const {
    for (const auto& r : residuals)
      if (!r.is_zero()) return false;
    return true;
  }
};

/// Solves L_X alpha^i = f^i_j alpha^j by matching leading differentials.
inline PfaffCertificate pfaff_check(const VectorField& x, const std::vector<PfaffForm>& sys,
                                    LieConvention conv = LieConvention::Paper) {
  const std::size_t r = sys.size();
  const auto& base = x.system();
  // C[j][k] = coefficient of the k-th leading differential in alpha^j.
  std::vector<std::vector<Poly>> c(r, std::vector<Poly>(r, Poly(base)));
  for (std::size_t j = 0; j < r; ++j) {
    auto co = one_form_coefficients(sys[j].form);
    for (std::size_t k = 0; k < r; ++k) c[j][k] = co[sys[k].leading];
    if (!(c[j][j] == Poly::constant(base, 1))) throw Error("Pfaff form '" + sys[j].name + "' is not normalized");
  }

  PfaffCertificate cert;
  std::vector<DiffForm> lx;
  for (const auto& a : sys) lx.push_back(form_lie_derivative(x, a.form, conv));

  for (std::size_t i = 0; i < r; ++i) {
    auto co = one_form_coefficients(lx[i]);
    std::vector<Poly> l(r, Poly(base));
    for (std::size_t k = 0; k < r; ++k) l[k] = co[sys[k].leading];
    // f C = l with C = 1 + N, N nilpotent: iterate f = l - f N.
    std::vector<Poly> f = l;
    for (std::size_t iter = 0; iter <= r; ++iter) {
      std::vector<Poly> next = l;
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j)
          if (j != k && !f[j].is_zero() && !c[j][k].is_zero()) next[k] -= f[j] * c[j][k];
      bool same = true;
      for (std::size_t k = 0; k < r; ++k) same = same && next[k] == f[k];
      f = std::move(next);
      if (same) break;
    }
    DiffForm res = lx[i];
    for (std::size_t j = 0; j < r; ++j)
      if (!f[j].is_zero()) res -= f[j] * sys[j].form;
    cert.multipliers.push_back(std::move(f));
    cert.residuals.push_back(std::move(res));
  }
  return cert;
}

/// A degree -1 field of the tilde basis with the coordinate at which its
/// component is 1 and every other basis element's component vanishes.
struct TildeField {
  std::string name;
  VectorField field;
  std::size_t leading = 0;
};

struct DualPfaffCertificate {
  /// coefficients[a][b] = f^a_b in [X, Dt^a] = f^a_b Dt^b.
  std::vector<std::vector<Poly>> coefficients;
  std::vector<VectorField> residuals;

  bool ok() const {
    for (const auto& r : residuals)
      if (!r.is_zero()) return false;
    return true;
  }
};

inline DualPfaffCertificate dual_pfaff_check(const VectorField& x, const std::vector<TildeField>& basis) {
  DualPfaffCertificate cert;
  for (const auto& a : basis) {
    VectorField br = vf_bracket(x, a.field);
    std::vector<Poly> f;
    VectorField res = br;
    for (const auto& b : basis) {
      f.push_back(br[b.leading]);
      if (!f.back().is_zero()) res -= f.back() * b.field;
    }
    cert.coefficients.push_back(std::move(f));
    cert.residuals.push_back(std::move(res));
  }
  return cert;
}

/// Canonical text of a form; differentials print as d<name>.
inline std::string to_string(const DiffForm& w) { return to_string(w.poly()); }

inline std::ostream& operator<<(std::ostream& os, const DiffForm& x) { return os << to_string(x); }

}  // namespace superfield
