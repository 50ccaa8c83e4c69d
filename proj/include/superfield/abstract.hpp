#pragma once

/**
 * @file abstract.hpp
 * @brief The abstract presentations of ksle(5|10), vle(3|6) and mb(3|8) by
 * generators L_xi, J_X, G_omega, S_sigma with data polynomial in u.
 *
 * Data layout per kind:
 *   L: xi^i (n)
 *   J: X^a_b at index 2a+b (4)
 *   G: ksle omega_{ij} at 5i+j, antisymmetric; vle omega_{ia} and mb
 *      omega^i_a at 2i+a (6)
 *   S: sigma^a (2), mb only
 * L and J are even, G and S odd.
 */

#include <array>
#include <set>
#include <string>
#include <vector>

#include "superfield/epsilon.hpp"
#include "superfield/poly.hpp"
#include "superfield/random.hpp"

namespace superfield {

enum class AbstractKind { L, J, G, S };

inline const char* kind_name(AbstractKind k) {
  switch (k) {
    case AbstractKind::L: return "L";
    case AbstractKind::J: return "J";
    case AbstractKind::G: return "G";
    case AbstractKind::S: return "S";
  }
  return "?";
}

inline Parity kind_parity(AbstractKind k) {
  return k == AbstractKind::G || k == AbstractKind::S ? Parity::Odd : Parity::Even;
}

/// A sum over kinds; a kind with empty data is absent.
struct AbstractElement {
  std::array<std::vector<Poly>, 4> data;

  std::vector<Poly>& operator[](AbstractKind k) { return data[static_cast<int>(k)]; }
  const std::vector<Poly>& operator[](AbstractKind k) const { return data[static_cast<int>(k)]; }

  bool is_zero() const {
    for (const auto& d : data)
      for (const auto& p : d)
        if (!p.is_zero()) return false;
    return true;
  }
  friend bool operator==(const AbstractElement& a, const AbstractElement& b) { return (a - b).is_zero(); }

  AbstractElement& operator+=(const AbstractElement& o) {
    for (int k = 0; k < 4; ++k) {
      auto& d = data[k];
      const auto& e = o.data[k];
      if (d.size() < e.size()) d.resize(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) d[i] += e[i];
    }
    return *this;
  }
  AbstractElement& operator*=(const Rational& r) {
    for (auto& d : data)
      for (auto& p : d) p *= r;
    return *this;
  }
  friend AbstractElement operator+(AbstractElement a, const AbstractElement& b) { return a += b; }
  friend AbstractElement operator-(AbstractElement a, const AbstractElement& b) {
    AbstractElement nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend AbstractElement operator*(AbstractElement a, const Rational& r) { return a *= r; }
};

/// Coefficients of the bracket table; defaults are the printed ones.
struct AbstractConventions {
  Rational g_weight = make_rational(1, 2);  // density weight of G in [L, G] (vle, mb)
  Rational s_weight = make_rational(1, 2);  // in [L, S]
  Rational jg = 1;                          // [J, G]
  Rational js = -1;                         // [J, S]
  Rational gg_l = 1, gg_j = 1;              // vle {G, G}
  Rational gs_l = 1, gs_j = 1;              // mb {G, S}
  Rational ss_l = 1;                        // mb {S, S}
  bool traceless_j = false;                 // drop the trace of J data produced by odd brackets

  /// The printed table, except vle: G of weight -1/2, the J part of {G, G}
  /// with eps_{ac} instead of eps^{ac}, and its trace dropped. With those
  /// changes vle satisfies Jacobi; the printed vle table does not.
  static AbstractConventions for_preset(const std::string& tag) {
    AbstractConventions c;
    if (tag == "vle36") {
      c.g_weight = make_rational(-1, 2);
      c.gg_j = -1;
      c.traceless_j = true;
    }
    return c;
  }
};

class AbstractAlgebra {
 public:
  /// tag is ksle510, vle36 or mb38.
  explicit AbstractAlgebra(const std::string& tag) : AbstractAlgebra(tag, AbstractConventions::for_preset(tag)) {}
  AbstractAlgebra(const std::string& tag, AbstractConventions conv) : tag_(tag), conv_(std::move(conv)) {
    if (tag == "ksle510") {
      n_ = 5;
    } else if (tag == "vle36" || tag == "mb38") {
      n_ = 3;
    } else {
      throw Error("no abstract presentation for preset " + tag);
    }
    std::vector<Coordinate> cs;
    for (int i = 0; i < n_; ++i) cs.push_back({"u" + std::to_string(i + 1), Parity::Even, 1});
    sys_ = CoordinateSystem::make(std::move(cs));
  }

  const std::string& tag() const { return tag_; }
  int n() const { return n_; }
  const SystemPtr& system() const { return sys_; }
  Poly u(int i) const { return Poly::coordinate(sys_, static_cast<std::size_t>(i)); }
  Poly zero() const { return Poly(sys_); }

  std::vector<AbstractKind> kinds() const {
    if (tag_ == "ksle510") return {AbstractKind::L, AbstractKind::G};
    if (tag_ == "vle36") return {AbstractKind::L, AbstractKind::J, AbstractKind::G};
    return {AbstractKind::L, AbstractKind::J, AbstractKind::G, AbstractKind::S};
  }

  std::size_t size(AbstractKind k) const {
    switch (k) {
      case AbstractKind::L: return static_cast<std::size_t>(n_);
      case AbstractKind::J: return 4;
      case AbstractKind::G: return tag_ == "ksle510" ? 25 : 6;
      case AbstractKind::S: return 2;
    }
    return 0;
  }

  AbstractElement make(AbstractKind k, std::vector<Poly> d) const {
    if (d.size() != size(k)) throw Error(std::string("wrong data size for ") + kind_name(k));
    AbstractElement e;
    e[k] = std::move(d);
    return e;
  }
  std::vector<Poly> zeros(AbstractKind k) const { return std::vector<Poly>(size(k), zero()); }

  /// Constraint residuals: ksle div xi = 0 and d omega = 0; J traceless.
  std::vector<Poly> constraint_residuals(const AbstractElement& e) const {
    std::vector<Poly> out;
    const auto& xi = e[AbstractKind::L];
    if (tag_ == "ksle510" && !xi.empty()) {
      Poly div = zero();
      for (int i = 0; i < n_; ++i) div += d(xi[i], i);
      out.push_back(div);
    }
    const auto& om = e[AbstractKind::G];
    if (tag_ == "ksle510" && !om.empty())
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          out.push_back(om[5 * i + j] + om[5 * j + i]);
          for (int k = 0; k < 5; ++k)
            if (i < j && j < k) out.push_back(d(om[5 * j + k], i) + d(om[5 * k + i], j) + d(om[5 * i + j], k));
        }
    const auto& x = e[AbstractKind::J];
    if (!x.empty()) out.push_back(x[0] + x[3]);
    return out;
  }
  bool satisfies_constraints(const AbstractElement& e) const {
    for (const auto& r : constraint_residuals(e))
      if (!r.is_zero()) return false;
    return true;
  }

  AbstractElement bracket(const AbstractElement& x, const AbstractElement& y) const {
    AbstractElement out;
    for (auto a : kinds())
      for (auto b : kinds()) {
        if (empty(x[a]) || empty(y[b])) continue;
        out += pure(a, x[a], b, y[b]);
      }
    return out;
  }

  /// Random element of one kind satisfying the constraints, data of degree <= max_degree.
  AbstractElement random(Rng& rng, AbstractKind k, int max_degree) const {
    auto rp = [&](int deg) { return random_poly_upto(rng, sys_, deg, Parity::Even, 2); };
    std::vector<Poly> v = zeros(k);
    if (tag_ == "ksle510" && k == AbstractKind::L) {
      // xi^i = d_j A^{ij}, A antisymmetric
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          if (!rng.coin()) continue;
          Poly a = rp(max_degree + 1);
          v[i] += d(a, j);
          v[j] -= d(a, i);
        }
    } else if (tag_ == "ksle510" && k == AbstractKind::G) {
      // omega = d eta
      std::vector<Poly> eta;
      for (int i = 0; i < 5; ++i) eta.push_back(rng.coin() ? rp(max_degree + 1) : zero());
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) v[5 * i + j] = d(eta[j], i) - d(eta[i], j);
    } else if (k == AbstractKind::J) {
      v[1] = rp(max_degree);
      v[2] = rp(max_degree);
      v[0] = rp(max_degree);
      v[3] = -v[0];
    } else {
      for (auto& p : v) p = rp(max_degree);
    }
    return make(k, std::move(v));
  }

 private:
  Poly d(const Poly& p, int i) const { return derive(p, static_cast<std::size_t>(i)); }
  static bool empty(const std::vector<Poly>& v) {
    for (const auto& p : v)
      if (!p.is_zero()) return false;
    return true;
  }

  /// [x, y] for pure kinds; the reversed orders follow from graded antisymmetry.
  AbstractElement pure(AbstractKind a, const std::vector<Poly>& x, AbstractKind b, const std::vector<Poly>& y) const {
    using K = AbstractKind;
    const bool both_odd = kind_parity(a) == Parity::Odd && kind_parity(b) == Parity::Odd;
    if (rank(a) > rank(b)) {
      AbstractElement r = pure(b, y, a, x);
      return both_odd ? r : r * Rational(-1);
    }
    if (a == K::L && b == K::L) return ll(x, y);
    if (a == K::L && b == K::J) return lj(x, y);
    if (a == K::J && b == K::J) return jj(x, y);
    if (a == K::L && b == K::G) return lg(x, y);
    if (a == K::J && b == K::G) return jg(x, y);
    if (a == K::G && b == K::G) return gg(x, y);
    if (a == K::L && b == K::S) return ls(x, y);
    if (a == K::J && b == K::S) return js(x, y);
    if (a == K::G && b == K::S) return gs(x, y);
    if (a == K::S && b == K::S) return ss(x, y);
    throw Error("unsupported abstract bracket");
  }
  static int rank(AbstractKind k) { return static_cast<int>(k); }

  Poly xi_d(const std::vector<Poly>& xi, const Poly& p) const {
    Poly out = zero();
    for (int i = 0; i < n_; ++i)
      if (!xi[i].is_zero()) out += xi[i] * d(p, i);
    return out;
  }
  Poly div(const std::vector<Poly>& xi) const {
    Poly out = zero();
    for (int i = 0; i < n_; ++i) out += d(xi[i], i);
    return out;
  }

  // L_k(xi^i d_i eta^k - eta^j d_j xi^k)
  AbstractElement ll(const std::vector<Poly>& xi, const std::vector<Poly>& eta) const {
    auto v = zeros(AbstractKind::L);
    for (int k = 0; k < n_; ++k) v[k] = xi_d(xi, eta[k]) - xi_d(eta, xi[k]);
    return make(AbstractKind::L, v);
  }
  // J^b_a(xi^i d_i X^a_b)
  AbstractElement lj(const std::vector<Poly>& xi, const std::vector<Poly>& x) const {
    auto v = zeros(AbstractKind::J);
    for (int i = 0; i < 4; ++i) v[i] = xi_d(xi, x[i]);
    return make(AbstractKind::J, v);
  }
  // J^b_a(Y^a_c X^c_b - X^a_c Y^c_b)
  AbstractElement jj(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
    auto v = zeros(AbstractKind::J);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) v[2 * a + b] += y[2 * a + c] * x[2 * c + b] - x[2 * a + c] * y[2 * c + b];
    return make(AbstractKind::J, v);
  }

  AbstractElement lg(const std::vector<Poly>& xi, const std::vector<Poly>& om) const {
    auto v = zeros(AbstractKind::G);
    if (tag_ == "ksle510") {
      // G^{jk}(xi^i d_i om_{jk} + d_j xi^i om_{ik} + d_k xi^i om_{ji})
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
          Poly r = xi_d(xi, om[5 * j + k]);
          for (int i = 0; i < 5; ++i) r += d(xi[i], j) * om[5 * i + k] + d(xi[i], k) * om[5 * j + i];
          v[5 * j + k] = r;
        }
    } else if (tag_ == "vle36") {
      // G^{ja}(xi^i d_i om_{ja} + d_j xi^i om_{ia} + 1/2 d_i xi^i om_{ja})
      const Poly dv = div(xi);
      for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 2; ++a) {
          Poly r = xi_d(xi, om[2 * j + a]) + dv * om[2 * j + a] * conv_.g_weight;
          for (int i = 0; i < 3; ++i) r += d(xi[i], j) * om[2 * i + a];
          v[2 * j + a] = r;
        }
    } else {
      // G^a_j(xi^i d_i om^j_a + 1/2 d_i xi^i om^j_a - d_i xi^j om^i_a)
      const Poly dv = div(xi);
      for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 2; ++a) {
          Poly r = xi_d(xi, om[2 * j + a]) + dv * om[2 * j + a] * conv_.g_weight;
          for (int i = 0; i < 3; ++i) r -= d(xi[j], i) * om[2 * i + a];
          v[2 * j + a] = r;
        }
    }
    return make(AbstractKind::G, v);
  }
  // G(X^b_a om_{ib}), same index pattern for vle and mb
  AbstractElement jg(const std::vector<Poly>& x, const std::vector<Poly>& om) const {
    auto v = zeros(AbstractKind::G);
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) v[2 * i + a] += x[2 * b + a] * om[2 * i + b] * conv_.jg;
    return make(AbstractKind::G, v);
  }

  AbstractElement gg(const std::vector<Poly>& om, const std::vector<Poly>& up) const {
    if (tag_ == "ksle510") {
      // eps^{ijklm} L_m(om_{ij} up_{kl})
      auto v = zeros(AbstractKind::L);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          for (int k = 0; k < 5; ++k)
            for (int l = 0; l < 5; ++l) {
              const int m = 10 - i - j - k - l;
              if (m < 0 || m > 4) continue;
              const int s = eps5(i, j, k, l, m);
              if (s == 0 || om[5 * i + j].is_zero() || up[5 * k + l].is_zero()) continue;
              v[m] += om[5 * i + j] * up[5 * k + l] * Rational(s);
            }
      return make(AbstractKind::L, v);
    }
    if (tag_ == "mb38") return {};
    // eps^{ijk} eps^{ab} L_k(om_{ia} up_{jb})
    //   + eps^{ijk} eps^{ac} J^b_a(d_k om_{ic} up_{jb} - om_{ib} d_k up_{jc})
    auto l = zeros(AbstractKind::L);
    auto j = zeros(AbstractKind::J);
    for (int i = 0; i < 3; ++i)
      for (int jj2 = 0; jj2 < 3; ++jj2)
        for (int k = 0; k < 3; ++k) {
          const int e3 = eps3(i, jj2, k);
          if (e3 == 0) continue;
          for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c) {
              const int e2 = eps2_up(a, c);
              if (e2 == 0) continue;
              l[k] += om[2 * i + a] * up[2 * jj2 + c] * (conv_.gg_l * e3 * e2);
              for (int b = 0; b < 2; ++b)
                j[2 * a + b] += (d(om[2 * i + c], k) * up[2 * jj2 + b] - om[2 * i + b] * d(up[2 * jj2 + c], k)) *
                                (conv_.gg_j * e3 * e2);
            }
        }
    AbstractElement out = make(AbstractKind::L, l);
    out[AbstractKind::J] = traceless(j);
    return out;
  }

  std::vector<Poly> traceless(std::vector<Poly> j) const {
    if (!conv_.traceless_j) return j;
    const Poly t = (j[0] + j[3]) * make_rational(1, 2);
    j[0] -= t;
    j[3] -= t;
    return j;
  }

  // S_a(xi^i d_i sigma^a + 1/2 d_i xi^i sigma^a)
  AbstractElement ls(const std::vector<Poly>& xi, const std::vector<Poly>& s) const {
    auto v = zeros(AbstractKind::S);
    const Poly dv = div(xi);
    for (int a = 0; a < 2; ++a) v[a] = xi_d(xi, s[a]) + dv * s[a] * conv_.s_weight;
    return make(AbstractKind::S, v);
  }
  // -S_a(X^a_b sigma^b)
  AbstractElement js(const std::vector<Poly>& x, const std::vector<Poly>& s) const {
    auto v = zeros(AbstractKind::S);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) v[a] += x[2 * a + b] * s[b] * conv_.js;
    return make(AbstractKind::S, v);
  }
  // L_i(om^i_a sigma^a) + J^b_a(d_i om^i_b sigma^a - om^i_b d_i sigma^a)
  AbstractElement gs(const std::vector<Poly>& om, const std::vector<Poly>& s) const {
    auto l = zeros(AbstractKind::L);
    auto j = zeros(AbstractKind::J);
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) {
        l[i] += om[2 * i + a] * s[a] * conv_.gs_l;
        for (int b = 0; b < 2; ++b)
          j[2 * a + b] += (d(om[2 * i + b], i) * s[a] - om[2 * i + b] * d(s[a], i)) * conv_.gs_j;
      }
    AbstractElement out = make(AbstractKind::L, l);
    out[AbstractKind::J] = traceless(j);
    return out;
  }
  // eps^{ijk} eps_{ab} L_k(d_i sigma^a d_j tau^b)
  AbstractElement ss(const std::vector<Poly>& s, const std::vector<Poly>& t) const {
    auto l = zeros(AbstractKind::L);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int e3 = eps3(i, j, k);
          if (e3 == 0) continue;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              if (eps2_down(a, b) != 0) l[k] += d(s[a], i) * d(t[b], j) * (conv_.ss_l * e3 * eps2_down(a, b));
        }
    return make(AbstractKind::L, l);
  }

  std::string tag_;
  AbstractConventions conv_;
  int n_ = 0;
  SystemPtr sys_;
};

inline bool abstract_both_odd(AbstractKind a, AbstractKind b) {
  return kind_parity(a) == Parity::Odd && kind_parity(b) == Parity::Odd;
}

/// Kind triples (e.g. "GGS") on which Jacobi fails for some seeded sample.
inline std::set<std::string> abstract_jacobi_failures(const AbstractAlgebra& alg, std::uint64_t seed, int samples,
                                                      int maxdeg = 2) {
  Rng rng(seed);
  std::set<std::string> out;
  for (auto a : alg.kinds())
    for (auto b : alg.kinds())
      for (auto c : alg.kinds())
        for (int n = 0; n < samples; ++n) {
          auto x = alg.random(rng, a, maxdeg);
          auto y = alg.random(rng, b, maxdeg);
          auto z = alg.random(rng, c, maxdeg);
          auto lhs = alg.bracket(x, alg.bracket(y, z));
          auto rhs = alg.bracket(alg.bracket(x, y), z) +
                     alg.bracket(y, alg.bracket(x, z)) * Rational(abstract_both_odd(a, b) ? -1 : 1);
          if (!(lhs == rhs)) out.insert(std::string(kind_name(a)) + kind_name(b) + kind_name(c));
        }
  return out;
}

/// Kind pairs on which graded antisymmetry fails.
inline std::set<std::string> abstract_antisymmetry_failures(const AbstractAlgebra& alg, std::uint64_t seed,
                                                            int samples, int maxdeg = 2) {
  Rng rng(seed);
  std::set<std::string> out;
  for (auto a : alg.kinds())
    for (auto b : alg.kinds())
      for (int n = 0; n < samples; ++n) {
        auto x = alg.random(rng, a, maxdeg);
        auto y = alg.random(rng, b, maxdeg);
        if (!(alg.bracket(x, y) == alg.bracket(y, x) * Rational(abstract_both_odd(a, b) ? 1 : -1)))
          out.insert(std::string(kind_name(a)) + kind_name(b));
      }
  return out;
}

}  // namespace superfield
