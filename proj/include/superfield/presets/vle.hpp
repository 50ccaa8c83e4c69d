#pragma once

/**
 * @file vle.hpp
 * @brief vle(3|6).
 *
 * Coordinates u1..u3 (weight 2) and th_{ia} (weight 1), named th11, th12,
 * th21, ...; the first index is the 3-index, the second the sl(2) index.
 * sl(2) indices are raised with eps^{ab} (eps^{12} = 1) and lowered with
 * eps_{ab} (eps_{12} = -1): th^a_j = eps^{ab} th_{jb}.
 */

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "superfield/presets/preset.hpp"

namespace superfield {

/// u^i, th_{ia} and d^{ia} on a system that contains them.
struct VleCoords {
  explicit VleCoords(const SystemPtr& sys) {
    for (int i = 0; i < 3; ++i) {
      u[i] = Poly::coordinate(sys, "u" + std::to_string(i + 1));
      e[i] = VectorField::partial(sys, "u" + std::to_string(i + 1));
      for (int a = 0; a < 2; ++a) {
        const std::string n = th_name(i, a);
        th[i][a] = Poly::coordinate(sys, n);
        d[i][a] = VectorField::partial(sys, n);
        slot[i][a] = sys->index(n);
      }
    }
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) {
        th_up[i][a] = Poly(sys);
        for (int b = 0; b < 2; ++b)
          if (eps2_up(a, b) != 0) th_up[i][a] += th[i][b] * Rational(eps2_up(a, b));
      }
  }

  static std::string th_name(int i, int a) { return "th" + std::to_string(i + 1) + std::to_string(a + 1); }

  std::array<Poly, 3> u;
  std::array<VectorField, 3> e;
  std::array<std::array<Poly, 2>, 3> th;     // th_{ia}
  std::array<std::array<Poly, 2>, 3> th_up;  // th^a_i
  std::array<std::array<VectorField, 2>, 3> d;
  std::array<std::array<std::size_t, 2>, 3> slot{};
};

/// Lowers the sl(2) index: v_a = eps_{ab} v^b.
template <class T>
std::array<T, 2> lower2(const std::array<T, 2>& v) {
  return {v[1] * Rational(eps2_down(0, 1)), v[0] * Rational(eps2_down(1, 0))};
}
template <class T>
std::array<T, 2> raise2(const std::array<T, 2>& v) {
  return {v[1] * Rational(eps2_up(0, 1)), v[0] * Rational(eps2_up(1, 0))};
}

inline std::string idx2(int i, int a) { return std::to_string(i + 1) + std::to_string(a + 1); }
inline std::string idx1(int i) { return std::to_string(i + 1); }

class VlePreset : public Preset {
 public:
  VlePreset() : Preset("vle36", make_system()), c_(sys_) {
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) {
        dt_[i][a] = c_.d[i][a] + sym_term(i, a, 1);
        dn_[i][a] = c_.d[i][a] + sym_term(i, a, -1);
      }
    for (int i = 0; i < 3; ++i) {
      auto lo = lower2(dt_[i]);
      dt_lo_[i] = lo;
    }
  }

  const VleCoords& c() const { return c_; }
  const VectorField& dt(int i, int a) const { return dt_[i][a]; }
  /// ~D^i_a = eps_{ab} ~D^{ib}.
  const VectorField& dt_lo(int i, int a) const { return dt_lo_[i][a]; }

  VectorField theta_euler() const {
    VectorField x = zero_field();
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) x += c_.th[i][a] * c_.d[i][a];
    return x;
  }
  VectorField u_euler() const {
    VectorField x = zero_field();
    for (int i = 0; i < 3; ++i) x += c_.u[i] * c_.e[i];
    return x;
  }

  std::vector<Generator> generators() const override {
    std::vector<Generator> out;
    for (int i = 0; i < 3; ++i) out.push_back({"E_" + idx1(i), c_.e[i]});
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) out.push_back({"D^{" + idx2(i, a) + "}", dn_[i][a]});
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        if (k == 2 && l == 2) continue;
        VectorField x = c_.u[k] * c_.e[l];
        for (int a = 0; a < 2; ++a) x -= c_.th[l][a] * c_.d[k][a];
        if (k == l) x -= (u_euler() - theta_euler()) * make_rational(1, 3);
        out.push_back({"I^" + idx1(k) + "_" + idx1(l), x});
      }
    for (int cc = 0; cc < 2; ++cc)
      for (int dd = 0; dd < 2; ++dd) {
        if (cc == 1 && dd == 1) continue;
        VectorField x = zero_field();
        for (int i = 0; i < 3; ++i) x -= c_.th[i][dd] * c_.d[i][cc];
        if (cc == dd) x += theta_euler() * make_rational(1, 2);
        out.push_back({"J^" + idx1(cc) + "_" + idx1(dd), x});
      }
    out.push_back({"Z", u_euler() * Rational(2) + theta_euler()});
    return out;
  }

  std::vector<Generator> tilde_generators() const override {
    std::vector<Generator> out;
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) out.push_back({"~D^{" + idx2(i, a) + "}", dt_[i][a]});
    return out;
  }

  std::vector<TildeField> dual_pfaff_basis() const override {
    std::vector<TildeField> out;
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) out.push_back({"~D^{" + idx2(i, a) + "}", dt_[i][a], c_.slot[i][a]});
    return out;
  }

  std::vector<FrameElement> frame() const override {
    std::vector<FrameElement> out;
    for (const auto& t : dual_pfaff_basis()) out.push_back({t.name, t.field, t.leading});
    for (int i = 0; i < 3; ++i) out.push_back({"E_" + idx1(i), c_.e[i], static_cast<std::size_t>(i)});
    return out;
  }

  /// alpha^i = du^i - eps^{ijk} th^a_j dth_{ka}.
  DiffForm alpha(int i) const {
    DiffForm w = DiffForm::dx(sys_, static_cast<std::size_t>(i));
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int s = eps3(i, j, k);
        if (s == 0) continue;
        for (int a = 0; a < 2; ++a) w -= (c_.th_up[j][a] * Rational(s)) * DiffForm::dx(sys_, c_.slot[k][a]);
      }
    return w;
  }

  std::vector<std::pair<std::string, std::vector<PfaffForm>>> pfaff_systems() const override {
    std::vector<PfaffForm> a;
    for (int i = 0; i < 3; ++i) a.push_back({"alpha^" + idx1(i), alpha(i), static_cast<std::size_t>(i)});
    return {{"alpha", a}};
  }

  std::map<int, int> table_dimensions() const override { return {{-2, 3}, {-1, 6}, {0, 12}}; }

  std::size_t n_functions() const override { return 3; }
  int function_weight() const override { return 2; }

  struct Parts {
    std::array<Poly, 3> qt;
    std::array<std::array<Poly, 2>, 3> p;     // P_{ia}
    std::array<std::array<Poly, 2>, 3> p_up;  // P^a_i
  };
  Parts parts(const VectorField& x) const {
    auto cf = frame_decompose(x, frame());
    Parts out;
    std::size_t n = 0;
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) out.p[i][a] = cf[n++];
    for (int i = 0; i < 3; ++i) out.qt[i] = cf[n++];
    for (int i = 0; i < 3; ++i) out.p_up[i] = raise2(out.p[i]);
    return out;
  }

  /// A[i][a][k] = ~D^{ia} f^k and its lowered form ~D^i_a f^k.
  struct DtF {
    std::array<std::array<std::array<Poly, 3>, 2>, 3> up, lo;
  };
  DtF dtf(const FunctionData& f) const {
    DtF a;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        std::array<Poly, 2> v{vf_apply(dt_[i][0], f[k]), vf_apply(dt_[i][1], f[k])};
        auto l = lower2(v);
        for (int b = 0; b < 2; ++b) {
          a.up[i][b][k] = v[b];
          a.lo[i][b][k] = l[b];
        }
      }
    return a;
  }

  /// V_f = f^i d_i - 1/4 (-)^f eps_{ijk} ~D^i_a f^j ~D^{ka}.
  VectorField build_unchecked(const FunctionData& f) const override {
    VectorField x = zero_field();
    const Rational s = pm(function_parity(f));
    for (int i = 0; i < 3; ++i)
      if (!f[i].is_zero()) x += f[i] * c_.e[i];
    auto a = dtf(f);
    for (int k = 0; k < 3; ++k)
      for (int b = 0; b < 2; ++b) {
        Poly cf = zero();
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            const int e3 = eps3(i, j, k);
            if (e3 != 0) cf += a.lo[i][b][j] * Rational(e3);
          }
        if (!cf.is_zero()) x += (cf * (s * make_rational(-1, 4))) * dt_[k][b];
      }
    return x;
  }

  std::vector<NamedPoly> symmetry_residuals(const FunctionData& f) const override {
    std::vector<NamedPoly> out;
    auto a = dtf(f);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        for (int b = 0; b < 2; ++b)
          out.push_back({"fsymm[" + idx2(i, b) + "," + idx1(j) + "]", a.up[i][b][j] + a.up[j][b][i]});
    return out;
  }

  FunctionData invert(const VectorField& x) const override {
    auto pr = parts(x);
    return {pr.qt.begin(), pr.qt.end()};
  }

  static Rational h(int m, int i, int k, int j, int l) {
    Rational out(0);
    if (m == l) out += make_rational(eps3(i, k, j), 4);
    if (m == k) out += make_rational(eps3(i, j, l), 16);
    if (m == i) out += make_rational(eps3(j, k, l), 16);
    return out;
  }

  /// sum H^m_{ik|jl} A^{ia,k} B^j_a^{,l}
  FunctionData h_term(const DtF& a, const DtF& b) const {
    FunctionData out = zero_function();
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l) {
            Poly pr = zero();
            for (int x = 0; x < 2; ++x)
              if (!a.up[i][x][k].is_zero() && !b.lo[j][x][l].is_zero()) pr += a.up[i][x][k] * b.lo[j][x][l];
            if (pr.is_zero()) continue;
            for (int m = 0; m < 3; ++m) {
              const Rational hh = h(m, i, k, j, l);
              if (!is_zero(hh)) out[m] += pr * hh;
            }
          }
    return out;
  }

  FunctionData function_bracket(const FunctionData& f, const FunctionData& g) const override {
    FunctionData out = zero_function();
    const Parity pf = function_parity(f), pg = function_parity(g);
    const bool both_odd = pf == Parity::Odd && pg == Parity::Odd;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (!f[i].is_zero()) out[j] += f[i] * derive(g[j], static_cast<std::size_t>(i));
        if (!g[j].is_zero()) out[i] += g[j] * derive(f[i], static_cast<std::size_t>(j)) * Rational(both_odd ? 1 : -1);
      }
    auto a = dtf(f);
    auto b = dtf(g);
    auto t3 = h_term(a, b);
    auto t4 = h_term(b, a);
    const Rational s3 = pm(pf);
    const Rational s4 = -pm(pg + (both_odd ? Parity::Odd : Parity::Even));
    for (int m = 0; m < 3; ++m) out[m] += t3[m] * s3 + t4[m] * s4;
    return out;
  }

  std::vector<std::pair<std::string, FunctionData>> table_functions() const override {
    std::vector<std::pair<std::string, FunctionData>> out;
    for (int i = 0; i < 3; ++i) {
      FunctionData f = zero_function();
      f[i] = constant(1);
      out.push_back({"E_" + idx1(i), f});
    }
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) {
        FunctionData f = zero_function();
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            if (eps3(i, j, k) != 0) f[k] -= c_.th_up[j][a] * Rational(2 * eps3(i, j, k));
        out.push_back({"D^{" + idx2(i, a) + "}", f});
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == 2 && j == 2) continue;
        FunctionData f = zero_function();
        f[j] += c_.u[i];
        if (i == j)
          for (int l = 0; l < 3; ++l) f[l] -= c_.u[l] * make_rational(1, 3);
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            const int e3 = eps3(i, k, l);
            if (e3 == 0) continue;
            for (int a = 0; a < 2; ++a) f[l] -= c_.th_up[j][a] * c_.th[k][a] * Rational(e3);
          }
        out.push_back({"I^" + idx1(i) + "_" + idx1(j), f});
      }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        if (a == 1 && b == 1) continue;
        FunctionData f = zero_function();
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
              const int e3 = eps3(i, j, k);
              if (e3 != 0) f[k] += c_.th_up[i][a] * c_.th[j][b] * Rational(e3);
            }
        out.push_back({"J^" + idx1(a) + "_" + idx1(b), f});
      }
    FunctionData z = zero_function();
    for (int l = 0; l < 3; ++l) z[l] = c_.u[l] * Rational(2);
    out.push_back({"Z", z});
    return out;
  }

  /// ~D^{ka} P_{ka}
  Poly dp(const Parts& pr) const {
    Poly out = zero();
    for (int k = 0; k < 3; ++k)
      for (int a = 0; a < 2; ++a) out += vf_apply(dt_[k][a], pr.p[k][a]);
    return out;
  }

  std::vector<NamedPoly> condition_residuals(const VectorField& x) const override {
    std::vector<NamedPoly> out;
    if (x.is_zero()) return out;
    const Rational s = pm(x.parity_or());
    auto pr = parts(x);
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a)
        for (int j = 0; j < 3; ++j) {
          Poly r = vf_apply(dt_[i][a], pr.qt[j]);
          for (int k = 0; k < 3; ++k)
            if (eps3(i, j, k) != 0) r += pr.p_up[k][a] * (2 * s * eps3(i, j, k));
          out.push_back({"eqn[" + idx2(i, a) + "," + idx1(j) + "]", r});
          out.push_back({"symm[" + idx2(i, a) + "," + idx1(j) + "]",
                         vf_apply(dt_[i][a], pr.qt[j]) + vf_apply(dt_[j][a], pr.qt[i])});
        }
    const Poly d = dp(pr);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Poly inner = i == j ? d : zero();
        for (int a = 0; a < 2; ++a) inner -= vf_apply(dt_[j][a], pr.p[i][a]);
        out.push_back({"2eqn[" + idx1(i) + "," + idx1(j) + "]",
                       derive(pr.qt[j], static_cast<std::size_t>(i)) - inner * (s * make_rational(1, 2))});
      }
    Poly div = zero();
    for (int i = 0; i < 3; ++i) div += derive(pr.qt[i], static_cast<std::size_t>(i));
    out.push_back({"div", div - d * s});
    return out;
  }

  /// alpha-bar plus the Z-bar line; beta-bar for the conjectural sl(2) term.
  std::vector<TensorRep> tensor_reps() const override {
    TensorRep alpha{"alpha+v", 4, {}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        RMatrix m = zero_matrix(4);
        add_gl_generator(m, 0, 3, static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
        alpha.gens["I^" + idx1(i) + "_" + idx1(j)] = m;
      }
    RMatrix z = zero_matrix(4);
    z[3][3] = 1;
    alpha.gens["Z"] = z;
    return {alpha, beta_rep()};
  }

  /// J^c_d beta^a = delta^a_d beta^c - 1/2 delta^c_d beta^a.
  TensorRep beta_rep() const {
    TensorRep beta{"beta", 2, {}};
    for (int cc = 0; cc < 2; ++cc)
      for (int dd = 0; dd < 2; ++dd) {
        RMatrix m = zero_matrix(2);
        add_gl_generator(m, 0, 2, static_cast<std::size_t>(cc), static_cast<std::size_t>(dd), true);
        beta.gens["J^" + idx1(cc) + "_" + idx1(dd)] = m;
      }
    beta.conjectural = true;
    return beta;
  }

  /// d_j Q^i I^j_i - 1/3 (-)^X ~D^{ia} P_{ib} J^b_a + 1/6 d_i Q^i Z.
  PolyMatrix tensor_coefficients(const VectorField& x, const TensorRep& rep) const override {
    std::vector<std::pair<std::string, Poly>> cs;
    if (!x.is_zero()) {
      const Rational s = pm(x.parity_or());
      auto pr = parts(x);
      Poly div = zero();
      for (int i = 0; i < 3; ++i) {
        div += derive(pr.qt[i], static_cast<std::size_t>(i));
        for (int j = 0; j < 3; ++j) cs.push_back({"I^" + idx1(j) + "_" + idx1(i), derive(pr.qt[i], static_cast<std::size_t>(j))});
      }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          Poly k = zero();
          for (int i = 0; i < 3; ++i) k += vf_apply(dt_[i][a], pr.p[i][b]);
          cs.push_back({"J^" + idx1(b) + "_" + idx1(a), k * (s * make_rational(-1, 3))});
        }
      cs.push_back({"Z", div * make_rational(1, 6)});
    }
    return combine(sys_, rep, cs);
  }

 private:
  static SystemPtr make_system() {
    std::vector<Coordinate> cs;
    for (int i = 0; i < 3; ++i) cs.push_back({"u" + idx1(i), Parity::Even, 2});
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) cs.push_back({VleCoords::th_name(i, a), Parity::Odd, 1});
    return CoordinateSystem::make(std::move(cs));
  }

  /// s eps^{ijk} th^a_j d_k
  VectorField sym_term(int i, int a, int s) const {
    VectorField x = zero_field();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (eps3(i, j, k) != 0) x += (c_.th_up[j][a] * Rational(s * eps3(i, j, k))) * c_.e[k];
    return x;
  }

  VleCoords c_;
  std::array<std::array<VectorField, 2>, 3> dt_, dn_;
  std::array<std::array<VectorField, 2>, 3> dt_lo_;
};

}  // namespace superfield
