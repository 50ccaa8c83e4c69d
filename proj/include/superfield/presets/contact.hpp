#pragma once

/**
 * @file contact.hpp
 * @brief k(1|m) with an optional metric on the odd block, and the kas
 * filter at m = 6 (and its m = 4 analogue).
 *
 * Coordinates t (weight 2), th1..thm (weight 1). Indices on theta are raised
 * with g^{ab}; d^a = d/dth_a.
 */

#include <string>
#include <utility>
#include <vector>

#include "superfield/presets/preset.hpp"

namespace superfield {

class ContactPreset : public Preset {
 public:
  /// Identity metric when g is empty.
  explicit ContactPreset(int m, RMatrix g = {}, std::string tag = {})
      : Preset(tag.empty() ? "k1m:" + std::to_string(m) : std::move(tag), make_system(m)), m_(m), g_(std::move(g)) {
    if (m < 0) throw Error("k(1|m) needs m >= 0");
    if (g_.empty()) {
      g_ = zero_matrix(static_cast<std::size_t>(m));
      for (int a = 0; a < m; ++a) g_[a][a] = 1;
    }
    if (static_cast<int>(g_.size()) != m) throw Error("metric has the wrong size");
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (g_[a][b] != g_[b][a]) throw Error("metric must be symmetric");
    ginv_ = invert_matrix(g_);
  }

  int m() const { return m_; }
  const RMatrix& metric() const { return g_; }
  const RMatrix& metric_inverse() const { return ginv_; }

  Poly t() const { return coord("t"); }
  /// th_a (lower index).
  Poly th(int a) const { return coord("th" + std::to_string(a + 1)); }
  /// th^a = g^{ab} th_b.
  Poly th_up(int a) const {
    Poly p = zero();
    for (int b = 0; b < m_; ++b)
      if (!is_zero(ginv_[a][b])) p += th(b) * ginv_[a][b];
    return p;
  }
  /// d^a = d/dth_a.
  VectorField d_up(int a) const { return partial(static_cast<std::size_t>(a + 1)); }
  VectorField d_down(int a) const {
    VectorField v = zero_field();
    for (int b = 0; b < m_; ++b)
      if (!is_zero(g_[a][b])) v += d_up(b) * g_[a][b];
    return v;
  }
  VectorField e_field() const { return partial(0); }
  VectorField dt_up(int a) const { return d_up(a) + th_up(a) * e_field(); }
  VectorField dt_down(int a) const { return d_down(a) + th(a) * e_field(); }

  std::vector<Generator> generators() const override {
    std::vector<Generator> out;
    out.push_back({"E", e_field()});
    for (int a = 0; a < m_; ++a) out.push_back({"D^" + idx(a), d_up(a) - th_up(a) * e_field()});
    for (int a = 0; a < m_; ++a)
      for (int b = a + 1; b < m_; ++b)
        out.push_back({"J^{" + idx(a) + idx(b) + "}", th_up(a) * d_up(b) - th_up(b) * d_up(a)});
    VectorField z = t() * e_field() * Rational(2);
    for (int a = 0; a < m_; ++a) z += th(a) * d_up(a);
    out.push_back({"Z", z});
    return out;
  }

  std::vector<Generator> tilde_generators() const override {
    std::vector<Generator> out;
    for (int a = 0; a < m_; ++a) out.push_back({"~D^" + idx(a), dt_up(a)});
    return out;
  }

  std::vector<TildeField> dual_pfaff_basis() const override {
    std::vector<TildeField> out;
    for (int a = 0; a < m_; ++a) out.push_back({"~D^" + idx(a), dt_up(a), static_cast<std::size_t>(a + 1)});
    return out;
  }

  DiffForm alpha() const {
    DiffForm w = DiffForm::dx(sys_, 0);
    for (int a = 0; a < m_; ++a) w += th_up(a) * DiffForm::dx(sys_, static_cast<std::size_t>(a + 1));
    return w;
  }

  std::vector<std::pair<std::string, std::vector<PfaffForm>>> pfaff_systems() const override {
    return {{"alpha", {{"alpha", alpha(), 0}}}};
  }

  std::vector<FrameElement> frame() const override {
    std::vector<FrameElement> out;
    for (int a = 0; a < m_; ++a) out.push_back({"~D^" + idx(a), dt_up(a), static_cast<std::size_t>(a + 1)});
    out.push_back({"E", e_field(), 0});
    return out;
  }

  std::map<int, int> table_dimensions() const override {
    if (m_ == 0) return {{-2, 1}, {0, 1}};
    return {{-2, 1}, {-1, m_}, {0, m_ * (m_ - 1) / 2 + 1}};
  }

  std::size_t n_functions() const override { return 1; }
  int function_weight() const override { return 2; }

  /// Q-tilde and P_a (lower index) of a field.
  struct Parts {
    Poly qt;
    std::vector<Poly> p;  // P_a: coefficient of ~D^a
    std::vector<Poly> p_up;
  };
  Parts parts(const VectorField& x) const {
    auto c = frame_decompose(x, frame());
    Parts out{c.back(), {}, {}};
    out.p.assign(c.begin(), c.end() - 1);
    for (int a = 0; a < m_; ++a) {
      Poly u = zero();
      for (int b = 0; b < m_; ++b)
        if (!is_zero(ginv_[a][b])) u += out.p[b] * ginv_[a][b];
      out.p_up.push_back(u);
    }
    return out;
  }

  /// (2 - th_a d^a) f
  Poly two_minus_euler(const Poly& f) const {
    Poly out = f * Rational(2);
    for (int a = 0; a < m_; ++a) out -= th(a) * derive(f, static_cast<std::size_t>(a + 1));
    return out;
  }

  /// K_f = (2 - th_a d^a) f d_0 + (-)^f d_a f d^a + d_0 f th_a d^a.
  VectorField build_unchecked(const FunctionData& f) const override {
    const Poly& h = f.at(0);
    VectorField x = zero_field();
    if (h.is_zero()) return x;
    const Rational s = pm(parity_or(h));
    x[0] = two_minus_euler(h);
    const Poly h0 = derive(h, 0);
    for (int a = 0; a < m_; ++a) {
      Poly c = h0.is_zero() ? zero() : h0 * th(a);
      for (int b = 0; b < m_; ++b)
        if (!is_zero(g_[a][b])) c += derive(h, static_cast<std::size_t>(b + 1)) * (s * g_[a][b]);
      x[static_cast<std::size_t>(a + 1)] = c;
    }
    return x;
  }

  std::vector<NamedPoly> symmetry_residuals(const FunctionData&) const override { return {}; }

  FunctionData invert(const VectorField& x) const override {
    return {parts(x).qt * make_rational(1, 2)};
  }

  /// [f,g]_K = (2-th d)f d_0 g - d_0 f (2-th d)g + (-)^f d_a f d^a g.
  FunctionData function_bracket(const FunctionData& f, const FunctionData& g) const override {
    const Poly& a = f.at(0);
    const Poly& b = g.at(0);
    if (a.is_zero() || b.is_zero()) return {zero()};
    Poly out = two_minus_euler(a) * derive(b, 0) - derive(a, 0) * two_minus_euler(b);
    const Rational s = pm(parity_or(a));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        if (!is_zero(g_[i][j]))
          out += derive(a, static_cast<std::size_t>(j + 1)) * derive(b, static_cast<std::size_t>(i + 1)) * (s * g_[i][j]);
    return {out};
  }

  /// [f,g] = f d_0 g - (-)^{fg} g d_0 f + 1/2 (-)^f ~D^a f ~D_a g, the
  /// bracket of X_f = K_f / 2.
  Poly contact_bracket_half(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    const Parity pa = parity_or(a), pb = parity_or(b);
    const Rational sfg = pa == Parity::Odd && pb == Parity::Odd ? -1 : 1;
    Poly out = a * derive(b, 0) - b * derive(a, 0) * sfg;
    Poly half = zero();
    for (int i = 0; i < m_; ++i) half += vf_apply(dt_up(i), a) * vf_apply(dt_down(i), b);
    return out + half * (pm(pa) * make_rational(1, 2));
  }

  std::vector<std::pair<std::string, FunctionData>> table_functions() const override {
    std::vector<std::pair<std::string, FunctionData>> out;
    out.push_back({"E", {constant(make_rational(1, 2))}});
    for (int a = 0; a < m_; ++a) out.push_back({"D^" + idx(a), {-th_up(a)}});
    for (int a = 0; a < m_; ++a)
      for (int b = a + 1; b < m_; ++b) out.push_back({"J^{" + idx(a) + idx(b) + "}", {-(th_up(a) * th_up(b))}});
    out.push_back({"Z", {t()}});
    return out;
  }

  std::vector<NamedPoly> condition_residuals(const VectorField& x) const override {
    std::vector<NamedPoly> out;
    if (x.is_zero()) return out;
    const Rational s = pm(x.parity_or());
    auto pr = parts(x);
    for (int a = 0; a < m_; ++a)
      out.push_back({"keqn[" + idx(a) + "]", vf_apply(dt_up(a), pr.qt) - pr.p_up[a] * (2 * s)});
    if (m_ > 0) {
      Poly r = derive(pr.qt, 0);
      for (int a = 0; a < m_; ++a) r -= vf_apply(dt_up(a), pr.p[a]) * (s * make_rational(2, m_));
      out.push_back({"k2eqn", r});
    }
    return out;
  }

  /// gamma-bar block on lower-index vectors, J^{ab} e_c = delta^b_c e^a -
  /// delta^a_c e^b (the action of the field J^{ab} on th_c); Z-bar acts by
  /// z_weight. The opposite sign is an anti-representation for this L_X.
  TensorRep gamma_rep(const Rational& z_weight, std::string name) const {
    TensorRep rep{std::move(name), static_cast<std::size_t>(m_), {}};
    for (int a = 0; a < m_; ++a)
      for (int b = a + 1; b < m_; ++b) {
        RMatrix j = zero_matrix(rep.dim);
        for (int d = 0; d < m_; ++d) {
          j[d][b] += ginv_[a][d];
          j[d][a] -= ginv_[b][d];
        }
        rep.gens["J^{" + idx(a) + idx(b) + "}"] = j;
      }
    RMatrix z = zero_matrix(rep.dim);
    for (int a = 0; a < m_; ++a) z[a][a] = z_weight;
    rep.gens["Z"] = z;
    return rep;
  }

  std::vector<TensorRep> tensor_reps() const override {
    return {gamma_rep(0, "gamma"), gamma_rep(1, "gamma(Z=1)")};
  }

  /// 1/4 ~D_a ~D_b Q-tilde J^{ab} + 1/2 d_0 Q-tilde Z.
  PolyMatrix tensor_coefficients(const VectorField& x, const TensorRep& rep) const override {
    std::vector<std::pair<std::string, Poly>> c;
    if (!x.is_zero()) {
      const Poly qt = parts(x).qt;
      for (int a = 0; a < m_; ++a)
        for (int b = a + 1; b < m_; ++b) {
          // J^{ab} antisymmetric: the (a,b) and (b,a) terms add.
          Poly ab = vf_apply(dt_down(a), vf_apply(dt_down(b), qt));
          Poly ba = vf_apply(dt_down(b), vf_apply(dt_down(a), qt));
          c.push_back({"J^{" + idx(a) + idx(b) + "}", (ab - ba) * make_rational(1, 4)});
        }
      c.push_back({"Z", derive(qt, 0) * make_rational(1, 2)});
    }
    return combine(sys_, rep, c);
  }

  static std::string idx(int a) { return std::to_string(a + 1); }

  static RMatrix invert_matrix(const RMatrix& g) {
    const std::size_t n = g.size();
    RMatrix a = g, inv = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && is_zero(a[p][c])) ++p;
      if (p == n) throw Error("metric is singular");
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
      const Rational s = 1 / a[c][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[c][k] *= s;
        inv[c][k] *= s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || is_zero(a[r][c])) continue;
        const Rational f = a[r][c];
        for (std::size_t k = 0; k < n; ++k) {
          a[r][k] -= f * a[c][k];
          inv[r][k] -= f * inv[c][k];
        }
      }
    }
    return inv;
  }

 private:
  static SystemPtr make_system(int m) {
    std::vector<Coordinate> cs{{"t", Parity::Even, 2}};
    for (int a = 0; a < m; ++a) cs.push_back({"th" + std::to_string(a + 1), Parity::Odd, 1});
    return CoordinateSystem::make(std::move(cs));
  }

  int m_;
  RMatrix g_;
  RMatrix ginv_;
};

/// Result of the kas-type filter on k(1|2n), n = 2 or 3.
struct KasFilter {
  int degree = 0;
  /// Generating functions kept at that degree.
  std::vector<FunctionData> kept;
  /// Dimensions of the pieces: (other, plus, minus).
  int other = 0, plus = 0, minus = 0;
  /// tau^2 == 1 on the middle exterior power.
  bool involution = false;
};

/// th^{a_1}...th^{a_n} -> (1/n!) eps^{a_1..a_n b_1..b_n} th_{b_1}...th_{b_n} on
/// monomials of degree n in th; eps with upper indices is eps raised by g^{-1}.
inline Poly kas_duality(const ContactPreset& k, const Poly& w) {
  const int m = k.m();
  const int n = m / 2;
  const auto& eps = epsilon_table(m);
  const auto& gi = k.metric_inverse();
  // det(g^{-1}) relates eps^{...} to the numeric table.
  Rational det = 1;
  {
    RMatrix a = gi;
    for (int c = 0; c < m; ++c) {
      int p = c;
      while (p < m && is_zero(a[p][c])) ++p;
      if (p == m) return k.zero();
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (int r = c + 1; r < m; ++r) {
        const Rational f = a[r][c] / a[c][c];
        for (int q = c; q < m; ++q) a[r][q] -= f * a[c][q];
      }
    }
  }
  Rational fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  // th_{b1}..th_{bn} = g_{b1 c1}..g_{bn cn} th^{c1}..th^{cn}.
  const auto& g = k.metric();
  Poly out = k.zero();
  for (const auto& [mono, c] : w.terms()) {
    std::vector<int> lower;
    for (int a = 0; a < m; ++a)
      if (mono.odd >> (a) & 1U) lower.push_back(a);
    if (static_cast<int>(lower.size()) != n || mono.degree != n) throw Error("kas duality acts on pure theta monomials of degree m/2");
    std::vector<int> up(n);
    auto rec = [&](auto&& self, int pos, Rational coef) -> void {
      if (pos == n) {
        std::vector<int> idxs(up.begin(), up.end());
        idxs.resize(static_cast<std::size_t>(m));
        auto fill = [&](auto&& self2, int q) -> void {
          if (q == m) {
            const int e = eps.at(idxs.data());
            if (e == 0) return;
            Poly mon = k.constant(coef * det * e / fact);
            for (int r = n; r < m; ++r) mon = mon * k.th(idxs[r]);
            out += mon;
            return;
          }
          for (int d = 0; d < m; ++d) {
            idxs[q] = d;
            self2(self2, q + 1);
          }
        };
        fill(fill, n);
        return;
      }
      for (int cc = 0; cc < m; ++cc) {
        if (is_zero(g[lower[pos]][cc])) continue;
        up[pos] = cc;
        self(self, pos + 1, coef * g[lower[pos]][cc]);
      }
    };
    rec(rec, 0, c);
  }
  return out;
}

/// For m = 6 keeps the degree-1 functions t th_a plus the +1 eigenspace of
/// the duality on th th th; for m = 4 keeps t plus the +1 eigenspace on
/// th th at degree 0.
inline KasFilter kas_filter(const ContactPreset& k) {
  const int m = k.m();
  if (m != 6 && m != 4) throw Error("kas filter is defined for m = 6 (and m = 4) only");
  const int n = m / 2;
  KasFilter out;
  out.degree = n - 2;
  std::vector<Monomial> mons;
  for (const auto& mo : monomials_of_degree(*k.system(), n))
    if (mo.exps[0] == 0 && std::popcount(mo.odd) == n) mons.push_back(mo);
  // Matrix of tau - 1 on the exterior power; its null space is the +1 part.
  auto eigen = [&](int s) {
    std::vector<std::map<int, Rational>> cols(mons.size());
    std::map<int, std::map<int, Rational>> rows;
    for (std::size_t j = 0; j < mons.size(); ++j) {
      Poly img = kas_duality(k, Poly::from_term(k.system(), mons[j], 1));
      img -= Poly::from_term(k.system(), mons[j], s);
      for (const auto& [mo, c] : img.terms()) {
        auto it = std::find(mons.begin(), mons.end(), mo);
        rows[static_cast<int>(it - mons.begin())][static_cast<int>(j)] += c;
      }
    }
    RowSpace space;
    for (const auto& [r, row] : rows) space.insert(from_map(row));
    std::vector<FunctionData> basis;
    for (const auto& v : space.nullspace(static_cast<int>(mons.size()))) {
      Poly p = k.zero();
      for (const auto& [j, c] : v) p.add_term(mons[static_cast<std::size_t>(j)], c);
      basis.push_back({p});
    }
    return basis;
  };
  auto plus = eigen(1);
  auto minus = eigen(-1);
  out.plus = static_cast<int>(plus.size());
  out.minus = static_cast<int>(minus.size());
  out.involution = true;
  for (const auto& mo : mons) {
    Poly p = Poly::from_term(k.system(), mo, 1);
    if (!(kas_duality(k, kas_duality(k, p)) == p)) out.involution = false;
  }
  if (m == 6) {
    for (int a = 0; a < 6; ++a) out.kept.push_back({k.t() * k.th(a)});
  } else {
    out.kept.push_back({k.t()});
  }
  out.other = static_cast<int>(out.kept.size());
  for (auto& f : plus) out.kept.push_back(std::move(f));
  return out;
}

/// Default kas metric: det g = -1 so the duality squares to +1 over Q.
inline RMatrix kas_metric() {
  RMatrix g = zero_matrix(6);
  for (int a = 0; a < 6; ++a) g[a][a] = 1;
  g[5][5] = -1;
  return g;
}

class KasPreset : public ContactPreset {
 public:
  KasPreset() : ContactPreset(6, kas_metric(), "kas16") {}
};

}  // namespace superfield
