#pragma once

/**
 * @file preset.hpp
 * @brief Common interface of the algebra presets.
 *
 * A preset fixes a coordinate system, the generators of the non-positive
 * part, the tilde basis, the Pfaff forms and the generating-function map.
 * Much of what the checks need is generic once those are given: the frame
 * decomposition X = sum c_A T_A, the space of valid generating functions of
 * a given degree (a null space, since every constraint is linear), and
 * random valid data.
 */

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superfield/epsilon.hpp"
#include "superfield/forms.hpp"
#include "superfield/linalg.hpp"
#include "superfield/random.hpp"

namespace superfield {

struct Generator {
  std::string name;
  VectorField field;
};

/// A named polynomial that must vanish.
struct NamedPoly {
  std::string name;
  Poly value;
};

/// Components f of a generating function (f for k, f^i, f^a otherwise).
using FunctionData = std::vector<Poly>;

using RMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<Poly>>;

/// Finite-dimensional representation of the zero-degree algebra by
/// matrices, keyed by generator name (e.g. "I^1_2", "Z"). Column c holds the
/// image of basis vector c: x e_c = sum_b M[b][c] e_b.
struct TensorRep {
  std::string name;
  std::size_t dim = 0;
  std::map<std::string, RMatrix> gens;
  /// Guessed rather than derived; its failures are findings.
  bool conjectural = false;
};

inline RMatrix zero_matrix(std::size_t n) { return RMatrix(n, std::vector<Rational>(n, Rational(0))); }

/// A frame element: field plus the coordinate at which it is the unit.
struct FrameElement {
  std::string name;
  VectorField field;
  std::size_t leading = 0;
};

/// Coefficients c_A of X = sum_A c_A T_A. Each element must vanish at the
/// leading coordinates of all earlier elements.
inline std::vector<Poly> frame_decompose(const VectorField& x, const std::vector<FrameElement>& frame) {
  VectorField rest = x;
  std::vector<Poly> c;
  c.reserve(frame.size());
  for (const auto& t : frame) {
    Poly k = rest.system() ? rest[t.leading] : Poly();
    if (!k.is_zero()) rest -= k * t.field;
    c.push_back(std::move(k));
  }
  if (!rest.is_zero()) throw Error("frame does not span the field");
  return c;
}

inline Rational pm(Parity p) { return Rational(sign(p)); }

class Preset {
 public:
  virtual ~Preset() = default;

  const std::string& tag() const { return tag_; }
  const SystemPtr& system() const { return sys_; }

  Poly coord(const std::string& name) const { return Poly::coordinate(sys_, name); }
  Poly constant(const Rational& c) const { return Poly::constant(sys_, c); }
  Poly zero() const { return Poly(sys_); }
  VectorField partial(std::size_t mu) const { return VectorField::partial(sys_, mu); }
  VectorField zero_field() const { return VectorField(sys_); }

  /// Non-positive part: regular generators with their table names.
  virtual std::vector<Generator> generators() const = 0;
  /// Tilde generators (commutant of the negative part).
  virtual std::vector<Generator> tilde_generators() const = 0;
  /// Basis used for the dual Pfaff condition.
  virtual std::vector<TildeField> dual_pfaff_basis() const = 0;
  /// Named Pfaff systems preserved by the algebra.
  virtual std::vector<std::pair<std::string, std::vector<PfaffForm>>> pfaff_systems() const = 0;
  /// Frame used to read off Q-tilde, P (and R-tilde).
  virtual std::vector<FrameElement> frame() const = 0;

  /// Expected dimensions of the non-positive part, by degree.
  virtual std::map<int, int> table_dimensions() const = 0;

  // Generating functions ----------------------------------------------------
  virtual std::size_t n_functions() const = 0;
  /// Weight of the coordinate each f component multiplies (deg f = k + w).
  virtual int function_weight() const = 0;
  /// Parity of that coordinate.
  virtual Parity function_slot_parity() const { return Parity::Even; }
  /// The field of f without checking constraints.
  virtual VectorField build_unchecked(const FunctionData& f) const = 0;
  /// Every constraint instance on f (zero residual means satisfied).
  virtual std::vector<NamedPoly> symmetry_residuals(const FunctionData& f) const = 0;
  /// Generating function of a field in the algebra.
  virtual FunctionData invert(const VectorField& x) const = 0;
  virtual FunctionData function_bracket(const FunctionData& f, const FunctionData& g) const = 0;
  /// Table rows expressed as generating functions.
  virtual std::vector<std::pair<std::string, FunctionData>> table_functions() const = 0;

  /// Preservation conditions, identity cascade and divergence identities.
  virtual std::vector<NamedPoly> condition_residuals(const VectorField& x) const = 0;

  /// Extra constraint rows for the dual-Pfaff prolongation (ksle divQ).
  virtual std::vector<NamedPoly> extra_constraints(const VectorField&) const { return {}; }

  virtual std::vector<TensorRep> tensor_reps() const = 0;
  /// C_X with L_X = X + C_X on a representation.
  virtual PolyMatrix tensor_coefficients(const VectorField& x, const TensorRep& rep) const = 0;

  /// Field built from checked data; throws naming the first failed instance.
  VectorField build(const FunctionData& f) const {
    for (const auto& r : symmetry_residuals(f))
      if (!r.value.is_zero()) throw Error(tag_ + ": generating function violates " + r.name);
    return build_unchecked(f);
  }

  Parity function_parity(const FunctionData& f) const {
    for (const auto& c : f)
      if (!c.is_zero()) return parity_or(c) + function_slot_parity();
    return Parity::Even;
  }

  /// Zero-padded generating function.
  FunctionData zero_function() const { return FunctionData(n_functions(), zero()); }

  /// Basis of valid generating functions whose field has degree k.
  std::vector<FunctionData> function_space(int k) const {
    const int deg = k + function_weight();
    const Parity field_par = parity_of(k);
    const Parity comp_par = field_par + function_slot_parity();
    std::vector<Monomial> mons;
    for (const auto& m : monomials_of_degree(*sys_, deg))
      if (m.parity() == comp_par) mons.push_back(m);
    const std::size_t nf = n_functions();
    const int n = static_cast<int>(mons.size() * nf);
    // Column u = component * |mons| + monomial. Constraint rows are keyed by
    // (residual index, monomial of the residual).
    std::map<std::pair<std::size_t, Monomial>, std::map<int, Rational>> rows;
    for (int u = 0; u < n; ++u) {
      FunctionData f = zero_function();
      f[static_cast<std::size_t>(u) / mons.size()] = Poly::from_term(sys_, mons[static_cast<std::size_t>(u) % mons.size()], 1);
      auto res = symmetry_residuals(f);
      for (std::size_t r = 0; r < res.size(); ++r)
        for (const auto& [m, c] : res[r].value.terms()) rows[{r, m}][u] += c;
    }
    RowSpace space;
    for (const auto& [key, row] : rows) space.insert(from_map(row));
    std::vector<FunctionData> out;
    for (const auto& v : space.nullspace(n)) {
      FunctionData f = zero_function();
      for (const auto& [u, c] : v)
        f[static_cast<std::size_t>(u) / mons.size()].add_term(mons[static_cast<std::size_t>(u) % mons.size()], c);
      out.push_back(std::move(f));
    }
    return out;
  }

  /// Cached function_space.
  const std::vector<FunctionData>& function_space_cached(int k) const {
    auto it = fspace_cache_.find(k);
    if (it == fspace_cache_.end()) it = fspace_cache_.emplace(k, function_space(k)).first;
    return it->second;
  }

  /// Random valid generating function of the given field parity mixing all
  /// degrees whose component weight is at most max_weight.
  FunctionData random_function(Rng& rng, Parity parity, int max_weight, int terms = 3) const {
    FunctionData f = zero_function();
    std::vector<int> ks;
    for (int k = -function_weight(); k + function_weight() <= max_weight; ++k)
      if (parity_of(k) == parity && !function_space_cached(k).empty()) ks.push_back(k);
    if (ks.empty()) return f;
    for (int t = 0; t < terms; ++t) {
      const auto& basis = function_space_cached(rng.pick(ks));
      const auto& b = rng.pick(basis);
      Rational c = rng.small_rational();
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += b[i] * c;
    }
    return f;
  }

 protected:
  Preset(std::string tag, SystemPtr sys) : tag_(std::move(tag)), sys_(std::move(sys)) {}

  std::string tag_;
  SystemPtr sys_;

 private:
  mutable std::map<int, std::vector<FunctionData>> fspace_cache_;
};

using PresetPtr = std::shared_ptr<const Preset>;

/// Matrix unit e_{ab} minus trace part, on an n-dimensional block at offset.
inline void add_gl_generator(RMatrix& m, std::size_t off, std::size_t n, std::size_t a, std::size_t b,
                             bool traceless) {
  m[off + a][off + b] += 1;
  if (traceless && a == b)
    for (std::size_t c = 0; c < n; ++c) m[off + c][off + c] -= make_rational(1, static_cast<long>(n));
}

/// C = sum coeff_g * rho(g) over named generators.
inline PolyMatrix combine(const SystemPtr& sys, const TensorRep& rep,
                          const std::vector<std::pair<std::string, Poly>>& coeffs) {
  PolyMatrix c(rep.dim, std::vector<Poly>(rep.dim, Poly(sys)));
  for (const auto& [name, k] : coeffs) {
    if (k.is_zero()) continue;
    auto it = rep.gens.find(name);
    if (it == rep.gens.end()) continue;
    for (std::size_t a = 0; a < rep.dim; ++a)
      for (std::size_t b = 0; b < rep.dim; ++b)
        if (!is_zero(it->second[a][b])) c[a][b] += k * it->second[a][b];
  }
  return c;
}

}  // namespace superfield
