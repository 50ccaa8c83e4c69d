#pragma once

/**
 * @file ksle.hpp
 * @brief ksle(5|10) and its gl(5) extension.
 *
 * Coordinates u1..u5 (weight 2) and th_{ij}, i<j (weight 1); th_{ji} = -th_{ij}
 * and d^{ij} = d/dth_{ij} likewise. Sums over index pairs run over all
 * ordered pairs unless noted.
 */

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "superfield/presets/preset.hpp"

namespace superfield {

class KslePreset : public Preset {
 public:
  /// bar = true keeps Z (the gl(5) version).
  explicit KslePreset(bool bar) : Preset(bar ? "ksle510bar" : "ksle510", make_system()), bar_(bar) {
    for (int i = 0; i < 5; ++i) {
      u_[i] = coord("u" + std::to_string(i + 1));
      for (int j = 0; j < 5; ++j) {
        th_[i][j] = zero();
        d_[i][j] = zero_field();
        dt_[i][j] = zero_field();
      }
    }
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        th_[i][j] = coord(th_name(i, j));
        th_[j][i] = -th_[i][j];
        d_[i][j] = partial(sys_->index(th_name(i, j)));
        d_[j][i] = -d_[i][j];
      }
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        dt_[i][j] = d_[i][j] + sym_term(i, j, Rational(1, 2));
        dt_[j][i] = -dt_[i][j];
      }
  }

  bool bar() const { return bar_; }
  const Poly& u(int i) const { return u_[i]; }
  const Poly& th(int i, int j) const { return th_[i][j]; }
  const VectorField& d(int i, int j) const { return d_[i][j]; }
  const VectorField& dt(int i, int j) const { return dt_[i][j]; }
  VectorField e(int i) const { return partial(static_cast<std::size_t>(i)); }

  static std::string th_name(int i, int j) { return "th" + std::to_string(i + 1) + std::to_string(j + 1); }
  static std::string pair(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }
  static std::string one(int i) { return std::to_string(i + 1); }

  std::vector<Generator> generators() const override {
    std::vector<Generator> out;
    for (int k = 0; k < 5; ++k) out.push_back({"E_" + one(k), e(k)});
    for (int k = 0; k < 5; ++k)
      for (int l = k + 1; l < 5; ++l) out.push_back({"D^{" + pair(k, l) + "}", d_[k][l] + sym_term(k, l, Rational(-1, 2))});
    for (int k = 0; k < 5; ++k)
      for (int l = 0; l < 5; ++l) {
        if (k == 4 && l == 4) continue;
        VectorField x = u_[k] * e(l);
        for (int j = 0; j < 5; ++j) x -= th_[l][j] * d_[k][j];
        if (k == l) x -= euler() * make_rational(1, 5);
        out.push_back({"I^" + one(k) + "_" + one(l), x});
      }
    if (bar_) out.push_back({"Z", z_field()});
    return out;
  }

  /// u^i d_i - th_{ij} d^{ij}, summed over all i, j.
  VectorField euler() const {
    VectorField x = zero_field();
    for (int i = 0; i < 5; ++i) x += u_[i] * e(i);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) x -= th_[i][j] * d_[i][j];
    return x;
  }

  VectorField z_field() const {
    VectorField x = zero_field();
    for (int i = 0; i < 5; ++i) x += u_[i] * e(i) * Rational(2);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) x += th_[i][j] * d_[i][j] * make_rational(1, 2);
    return x;
  }

  std::vector<Generator> tilde_generators() const override {
    std::vector<Generator> out;
    for (int k = 0; k < 5; ++k)
      for (int l = k + 1; l < 5; ++l) out.push_back({"~D^{" + pair(k, l) + "}", dt_[k][l]});
    return out;
  }

  std::vector<TildeField> dual_pfaff_basis() const override {
    std::vector<TildeField> out;
    for (int k = 0; k < 5; ++k)
      for (int l = k + 1; l < 5; ++l) out.push_back({"~D^{" + pair(k, l) + "}", dt_[k][l], sys_->index(th_name(k, l))});
    return out;
  }

  std::vector<FrameElement> frame() const override {
    std::vector<FrameElement> out;
    for (const auto& t : dual_pfaff_basis()) out.push_back({t.name, t.field, t.leading});
    for (int i = 0; i < 5; ++i) out.push_back({"E_" + one(i), e(i), static_cast<std::size_t>(i)});
    return out;
  }

  /// alpha^i = du^i + 1/4 eps^{ijklm} th_{jk} dth_{lm}.
  DiffForm alpha(int i) const {
    DiffForm w = DiffForm::dx(sys_, static_cast<std::size_t>(i));
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k)
        for (int l = 0; l < 5; ++l)
          for (int m = 0; m < 5; ++m) {
            const int s = eps5(i, j, k, l, m);
            if (s == 0 || l > m) continue;
            // l<m and l>m halves are equal.
            w += (th_[j][k] * make_rational(s, 2)) * DiffForm::dx(sys_, sys_->index(th_name(l, m)));
          }
    return w;
  }

  std::vector<std::pair<std::string, std::vector<PfaffForm>>> pfaff_systems() const override {
    std::vector<PfaffForm> a;
    for (int i = 0; i < 5; ++i) a.push_back({"alpha^" + one(i), alpha(i), static_cast<std::size_t>(i)});
    return {{"alpha", a}};
  }

  std::map<int, int> table_dimensions() const override { return {{-2, 5}, {-1, 10}, {0, bar_ ? 25 : 24}}; }

  std::size_t n_functions() const override { return 5; }
  int function_weight() const override { return 2; }

  struct Parts {
    std::array<Poly, 5> qt;
    std::array<std::array<Poly, 5>, 5> p;  // P_{ij}, antisymmetric
  };
  Parts parts(const VectorField& x) const {
    auto c = frame_decompose(x, frame());
    Parts out;
    std::size_t n = 0;
    for (int i = 0; i < 5; ++i) out.p[i][i] = zero();
    for (int k = 0; k < 5; ++k)
      for (int l = k + 1; l < 5; ++l) {
        out.p[k][l] = c[n];
        out.p[l][k] = -c[n];
        ++n;
      }
    for (int i = 0; i < 5; ++i) out.qt[i] = c[n++];
    return out;
  }

  /// U_f = f^i d_i + 1/24 (-)^f eps_{ijklm} ~D^{ij} f^k ~D^{lm}.
  VectorField build_unchecked(const FunctionData& f) const override {
    VectorField x = zero_field();
    const Rational s = pm(function_parity(f));
    for (int i = 0; i < 5; ++i)
      if (!f[i].is_zero()) x += f[i] * e(i);
    auto a = dtf(f);
    for (int l = 0; l < 5; ++l)
      for (int m = l + 1; m < 5; ++m) {
        Poly c = zero();
        for (int i = 0; i < 5; ++i)
          for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) {
              const int e5 = eps5(i, j, k, l, m);
              if (e5 != 0) c += a[i][j][k] * Rational(e5);
            }
        // (l,m) and (m,l) contribute equally.
        if (!c.is_zero()) x += (c * (s * make_rational(2, 24))) * dt_[l][m];
      }
    return x;
  }

  /// A[i][j][k] = ~D^{ij} f^k.
  using Tensor3 = std::array<std::array<std::array<Poly, 5>, 5>, 5>;
  Tensor3 dtf(const FunctionData& f) const {
    Tensor3 a;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) a[i][j][k] = i == j ? zero() : vf_apply(dt_[i][j], f[k]);
    return a;
  }

  std::vector<NamedPoly> symmetry_residuals(const FunctionData& f) const override {
    std::vector<NamedPoly> out;
    auto a = dtf(f);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
          const std::string tag = "[" + pair(i, j) + "," + one(k) + "]";
          out.push_back({"fsymm" + tag, a[i][j][k] - a[j][k][i]});
          out.push_back({"fsymm'" + tag, a[i][j][k] + a[i][k][j]});
        }
    if (!bar_) out.push_back({"divQ", divq(f)});
    return out;
  }

  Poly divq(const FunctionData& f) const {
    Poly d = zero();
    for (int i = 0; i < 5; ++i) d += derive(f[i], static_cast<std::size_t>(i));
    return d;
  }

  FunctionData invert(const VectorField& x) const override {
    auto pr = parts(x);
    return {pr.qt.begin(), pr.qt.end()};
  }

  /// S_{lm} = sum eps_{ijklm} A^{ijk}.
  std::array<std::array<Poly, 5>, 5> contract(const Tensor3& a) const {
    std::array<std::array<Poly, 5>, 5> s;
    for (int l = 0; l < 5; ++l)
      for (int m = 0; m < 5; ++m) {
        s[l][m] = zero();
        for (int i = 0; i < 5; ++i)
          for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) {
              const int e5 = eps5(i, j, k, l, m);
              if (e5 != 0 && !a[i][j][k].is_zero()) s[l][m] += a[i][j][k] * Rational(e5);
            }
      }
    return s;
  }

  /// sum H^p_{ijk|lmn} A^{ijk} B^{lmn} with
  /// H = 1/24 eps_{ijklm} delta^p_n - 1/576 eps_{ijkqr} eps_{lmnst} eps^{qrstp}.
  /// The eps-eps-eps part comes from {~D,~D} once; both H terms of the
  /// bracket carry it, so each gets half. With 1/288 the two parts of H
  /// cancel on every valid f.
  FunctionData h_term(const Tensor3& a, const Tensor3& b, const Rational& c3 = make_rational(1, 576)) const {
    auto sa = contract(a);
    auto sb = contract(b);
    FunctionData out = zero_function();
    for (int p = 0; p < 5; ++p)
      for (int l = 0; l < 5; ++l)
        for (int m = 0; m < 5; ++m)
          if (!sa[l][m].is_zero() && !b[l][m][p].is_zero()) out[p] += sa[l][m] * b[l][m][p] * make_rational(1, 24);
    for (int q = 0; q < 5; ++q)
      for (int r = 0; r < 5; ++r) {
        if (sa[q][r].is_zero()) continue;
        for (int s = 0; s < 5; ++s)
          for (int t = 0; t < 5; ++t) {
            if (sb[s][t].is_zero()) continue;
            for (int p = 0; p < 5; ++p) {
              const int e5 = eps5(q, r, s, t, p);
              if (e5 != 0) out[p] -= sa[q][r] * sb[s][t] * (c3 * e5);
            }
          }
      }
    return out;
  }

  FunctionData function_bracket(const FunctionData& f, const FunctionData& g) const override {
    FunctionData out = zero_function();
    const Parity pf = function_parity(f), pg = function_parity(g);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (!f[i].is_zero()) out[j] += f[i] * derive(g[j], static_cast<std::size_t>(i));
        if (!g[j].is_zero()) out[i] -= derive(f[i], static_cast<std::size_t>(j)) * g[j];
      }
    auto a = dtf(f);
    auto b = dtf(g);
    auto t3 = h_term(a, b);
    auto t4 = h_term(b, a);
    const Rational s3 = pm(pf);
    const Rational s4 = -pm(pg + (pf == Parity::Odd && pg == Parity::Odd ? Parity::Odd : Parity::Even));
    for (int p = 0; p < 5; ++p) out[p] += t3[p] * s3 + t4[p] * s4;
    return out;
  }

  std::vector<std::pair<std::string, FunctionData>> table_functions() const override {
    std::vector<std::pair<std::string, FunctionData>> out;
    for (int i = 0; i < 5; ++i) {
      FunctionData f = zero_function();
      f[i] = constant(1);
      out.push_back({"E_" + one(i), f});
    }
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        FunctionData f = zero_function();
        for (int k = 0; k < 5; ++k)
          for (int l = 0; l < 5; ++l)
            for (int m = 0; m < 5; ++m) {
              const int e5 = eps5(i, j, k, l, m);
              if (e5 != 0) f[m] -= th_[k][l] * Rational(e5);
            }
        out.push_back({"D^{" + pair(i, j) + "}", f});
      }
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (i == 4 && j == 4) continue;
        FunctionData f = zero_function();
        f[j] += u_[i];
        if (i == j)
          for (int n = 0; n < 5; ++n) f[n] -= u_[n] * make_rational(1, 5);
        for (int k = 0; k < 5; ++k)
          for (int l = 0; l < 5; ++l)
            for (int m = 0; m < 5; ++m)
              for (int n = 0; n < 5; ++n) {
                const int e5 = eps5(i, k, l, m, n);
                if (e5 != 0) f[n] += th_[j][k] * th_[l][m] * make_rational(e5, 2);
              }
        out.push_back({"I^" + one(i) + "_" + one(j), f});
      }
    if (bar_) {
      FunctionData f = zero_function();
      for (int n = 0; n < 5; ++n) f[n] = u_[n] * Rational(2);
      out.push_back({"Z", f});
    }
    return out;
  }

  std::vector<NamedPoly> condition_residuals(const VectorField& x) const override {
    std::vector<NamedPoly> out;
    if (x.is_zero()) return out;
    const Rational s = pm(x.parity_or());
    auto pr = parts(x);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
          Poly r = vf_apply(dt_[i][j], pr.qt[k]);
          for (int l = 0; l < 5; ++l)
            for (int m = 0; m < 5; ++m) {
              const int e5 = eps5(i, j, k, l, m);
              if (e5 != 0) r -= pr.p[l][m] * (s * e5);
            }
          out.push_back({"eqn[" + pair(i, j) + "," + one(k) + "]", r});
        }
    Poly dp = zero();  // ~D^{kl} P_{kl}
    for (int k = 0; k < 5; ++k)
      for (int l = 0; l < 5; ++l)
        if (k != l) dp += vf_apply(dt_[k][l], pr.p[k][l]);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        Poly r = derive(pr.qt[j], static_cast<std::size_t>(i));
        Poly inner = i == j ? dp : zero();
        for (int k = 0; k < 5; ++k)
          if (j != k) inner -= vf_apply(dt_[j][k], pr.p[i][k]) * Rational(2);
        r -= inner * (s * make_rational(1, 6));
        out.push_back({"2eqn[" + one(i) + "," + one(j) + "]", r});
      }
    Poly div = zero();
    for (int i = 0; i < 5; ++i) div += derive(pr.qt[i], static_cast<std::size_t>(i));
    out.push_back({"div", div - dp * (s * make_rational(1, 2))});
    if (!bar_) out.push_back({"divQ", div});
    return out;
  }

  std::vector<NamedPoly> extra_constraints(const VectorField& x) const override {
    if (bar_) return {};
    if (x.is_zero()) return {{"divQ", zero()}};
    auto pr = parts(x);
    Poly div = zero();
    for (int i = 0; i < 5; ++i) div += derive(pr.qt[i], static_cast<std::size_t>(i));
    return {{"divQ", div}};
  }

  /// alpha-bar (5) plus a line on which Z-bar acts by 1 (bar) or 0.
  std::vector<TensorRep> tensor_reps() const override {
    TensorRep rep{"alpha+v", 6, {}};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        RMatrix m = zero_matrix(6);
        // I^i_j alpha^k = delta^k_j alpha^i - 1/5 delta^i_j alpha^k
        for (int k = 0; k < 5; ++k) {
          if (k == j) m[i][k] += 1;
          if (i == j) m[k][k] -= make_rational(1, 5);
        }
        rep.gens["I^" + one(i) + "_" + one(j)] = m;
      }
    RMatrix z = zero_matrix(6);
    if (bar_) z[5][5] = 1;
    rep.gens["Z"] = z;
    return {rep};
  }

  /// d_j Q^i I^j_i + 1/10 d_i Q^i Z.
  PolyMatrix tensor_coefficients(const VectorField& x, const TensorRep& rep) const override {
    std::vector<std::pair<std::string, Poly>> c;
    if (!x.is_zero()) {
      auto pr = parts(x);
      Poly div = zero();
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) c.push_back({"I^" + one(j) + "_" + one(i), derive(pr.qt[i], static_cast<std::size_t>(j))});
      for (int i = 0; i < 5; ++i) div += derive(pr.qt[i], static_cast<std::size_t>(i));
      c.push_back({"Z", div * make_rational(1, 10)});
    }
    return combine(sys_, rep, c);
  }

 private:
  static SystemPtr make_system() {
    std::vector<Coordinate> cs;
    for (int i = 0; i < 5; ++i) cs.push_back({"u" + one(i), Parity::Even, 2});
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) cs.push_back({th_name(i, j), Parity::Odd, 1});
    return CoordinateSystem::make(std::move(cs));
  }

  /// c eps^{klmni} th_{mn} d_i
  VectorField sym_term(int k, int l, const Rational& c) const {
    VectorField x = zero_field();
    for (int m = 0; m < 5; ++m)
      for (int n = 0; n < 5; ++n)
        for (int i = 0; i < 5; ++i) {
          const int s = eps5(k, l, m, n, i);
          if (s != 0) x += (th_[m][n] * (c * s)) * e(i);
        }
    return x;
  }

  bool bar_;
  std::array<Poly, 5> u_;
  std::array<std::array<Poly, 5>, 5> th_;
  std::array<std::array<VectorField, 5>, 5> d_;
  std::array<std::array<VectorField, 5>, 5> dt_;
};

}  // namespace superfield
