#pragma once

/**
 * @file prolong.hpp
 * @brief Degree-by-degree Cartan prolongation by exact linear algebra.
 *
 * Two constructions of the positive part are provided. The classic one
 * takes g_{-1} and g_{k-1} and solves [D, X] in g_{k-1} for all D; the
 * dual-Pfaff one asks that [X, D~^a] re-expand over the tilde basis. Both
 * are null spaces over the monomial basis of degree-k fields, and the
 * result is normalized to reduced row-echelon form so that two spaces can
 * be compared row by row.
 */

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "superfield/presets/preset.hpp"

namespace superfield {

/// Monomial fields m d_mu of one degree, indexed as linear coordinates.
class FieldIndex {
 public:
  FieldIndex(SystemPtr sys, int k, std::optional<Parity> parity = std::nullopt) : sys_(std::move(sys)), k_(k) {
    for (std::size_t mu = 0; mu < sys_->size(); ++mu)
      for (const auto& m : monomials_of_degree(*sys_, k + sys_->weight(mu))) {
        if (parity && m.parity() + sys_->parity(mu) != *parity) continue;
        col_.emplace(std::make_pair(mu, m), static_cast<int>(slots_.size()));
        slots_.emplace_back(mu, m);
      }
  }

  int degree() const { return k_; }
  int size() const { return static_cast<int>(slots_.size()); }
  const SystemPtr& system() const { return sys_; }

  VectorField field(int u) const {
    VectorField x(sys_);
    x[slots_[u].first] = Poly::from_term(sys_, slots_[u].second, 1);
    return x;
  }

  /// Coordinates of x; throws if x has a term outside this index.
  SparseVec encode(const VectorField& x) const {
    std::map<int, Rational> m;
    for (std::size_t mu = 0; mu < x.dim(); ++mu)
      for (const auto& [mono, c] : x[mu].terms()) {
        auto it = col_.find({mu, mono});
        if (it == col_.end()) throw Error("field is not homogeneous of degree " + std::to_string(k_));
        m[it->second] = c;
      }
    return from_map(m);
  }

  VectorField decode(const SparseVec& v) const {
    VectorField x(sys_);
    for (const auto& [u, c] : v) x[slots_[u].first].add_term(slots_[u].second, c);
    return x;
  }

 private:
  SystemPtr sys_;
  int k_;
  std::vector<std::pair<std::size_t, Monomial>> slots_;
  std::map<std::pair<std::size_t, Monomial>, int> col_;
};

struct GradedComponentBasis {
  int degree = 0;
  std::vector<VectorField> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Unknowns, exact constraint rows, and the null space as solution.
struct LinearSystem {
  int unknowns = 0;
  RowSpace constraints;
  std::vector<SparseVec> solution() const { return constraints.nullspace(unknowns); }
};

/// Collects constraint rows keyed by (family, slot, monomial), each row a
/// linear form in the unknowns.
class RowCollector {
 public:
  void add(int family, std::size_t slot, const Poly& p, int unknown) {
    for (const auto& [m, c] : p.terms()) rows_[{family, slot, m}][unknown] += c;
  }
  void add(int family, const SparseVec& v, int unknown) {
    for (const auto& [col, c] : v) rows_[{family, static_cast<std::size_t>(col), Monomial{}}][unknown] += c;
  }
  LinearSystem finish(int unknowns) const {
    LinearSystem s;
    s.unknowns = unknowns;
    for (const auto& [key, row] : rows_) s.constraints.insert(from_map(row));
    return s;
  }

 private:
  std::map<std::tuple<int, std::size_t, Monomial>, std::map<int, Rational>> rows_;
};

inline std::vector<VectorField> homogeneous_basis(const SystemPtr& sys, int k,
                                                  std::optional<Parity> parity = std::nullopt) {
  if (k < -sys->max_weight()) throw Error("no fields of degree " + std::to_string(k));
  FieldIndex idx(sys, k, parity);
  std::vector<VectorField> out;
  out.reserve(static_cast<std::size_t>(idx.size()));
  for (int u = 0; u < idx.size(); ++u) out.push_back(idx.field(u));
  return out;
}

/// Span of homogeneous fields as a reduced row space.
inline RowSpace span_in(const FieldIndex& idx, const std::vector<VectorField>& fields) {
  RowSpace r;
  for (const auto& x : fields) r.insert(idx.encode(x));
  return r;
}

/// Reduced row-echelon basis of the span of fields of degree k.
inline GradedComponentBasis canonical_basis(const SystemPtr& sys, int k, const std::vector<VectorField>& fields) {
  FieldIndex idx(sys, k);
  GradedComponentBasis out;
  out.degree = k;
  const RowSpace span = span_in(idx, fields);
  for (const auto& [p, row] : span.rows()) out.basis.push_back(idx.decode(row));
  return out;
}

/// Degree-k part of the preset's table of the non-positive part.
inline GradedComponentBasis table_component(const Preset& p, int k) {
  std::vector<VectorField> fs;
  for (const auto& g : p.generators())
    if (vf_degree(g.field) == k) fs.push_back(g.field);
  return canonical_basis(p.system(), k, fs);
}

namespace detail {

inline GradedComponentBasis solve_fields(const FieldIndex& unknowns, const LinearSystem& s) {
  std::vector<VectorField> fs;
  for (const auto& v : s.solution()) fs.push_back(unknowns.decode(v));
  return canonical_basis(unknowns.system(), unknowns.degree(), fs);
}

}  // namespace detail

inline GradedComponentBasis prolong_classic(const SystemPtr& sys, const GradedComponentBasis& gm1,
                                            const GradedComponentBasis& g_prev, int k) {
  FieldIndex xs(sys, k);
  FieldIndex target_idx(sys, k - 1);
  RowSpace target = span_in(target_idx, g_prev.basis);
  RowCollector rows;
  for (int u = 0; u < xs.size(); ++u) {
    const VectorField x = xs.field(u);
    for (std::size_t d = 0; d < gm1.basis.size(); ++d)
      rows.add(static_cast<int>(d), target.reduce(target_idx.encode(vf_bracket(gm1.basis[d], x))), u);
  }
  return detail::solve_fields(xs, rows.finish(xs.size()));
}

inline GradedComponentBasis prolong_dual_pfaff(const Preset& p, int k) {
  FieldIndex xs(p.system(), k);
  const auto basis = p.dual_pfaff_basis();
  const int nb = static_cast<int>(basis.size());
  RowCollector rows;
  for (int u = 0; u < xs.size(); ++u) {
    const VectorField x = xs.field(u);
    auto cert = dual_pfaff_check(x, basis);
    for (int a = 0; a < nb; ++a)
      for (std::size_t mu = 0; mu < cert.residuals[a].dim(); ++mu)
        rows.add(a, mu, cert.residuals[a][mu], u);
    auto extra = p.extra_constraints(x);
    for (std::size_t r = 0; r < extra.size(); ++r) rows.add(nb, r, extra[r].value, u);
  }
  return detail::solve_fields(xs, rows.finish(xs.size()));
}

/// [x, y] for every x in a, y in b lies in c.
inline bool bracket_closes(const GradedComponentBasis& a, const GradedComponentBasis& b,
                           const GradedComponentBasis& c, const SystemPtr& sys) {
  FieldIndex idx(sys, c.degree);
  RowSpace span = span_in(idx, c.basis);
  for (const auto& x : a.basis)
    for (const auto& y : b.basis) {
      VectorField z = vf_bracket(x, y);
      if (z.is_zero()) continue;
      if (vf_degree(z) != c.degree || !span.contains(idx.encode(z))) return false;
    }
  return true;
}

/// Each basis vector of gm1 generates all of gm1 under g0.
inline bool g0_orbits_span(const GradedComponentBasis& g0, const GradedComponentBasis& gm1, const SystemPtr& sys) {
  FieldIndex idx(sys, gm1.degree);
  for (const auto& start : gm1.basis) {
    RowSpace orbit;
    std::vector<VectorField> frontier{start};
    orbit.insert(idx.encode(start));
    while (!frontier.empty()) {
      std::vector<VectorField> next;
      for (const auto& v : frontier)
        for (const auto& x : g0.basis) {
          VectorField w = vf_bracket(x, v);
          if (!w.is_zero() && orbit.insert(idx.encode(w))) next.push_back(std::move(w));
        }
      frontier = std::move(next);
    }
    if (orbit.rank() != gm1.dimension()) return false;
  }
  return true;
}

struct ProlongLevel {
  int degree = 0;
  std::size_t table = 0;  // non-positive degrees only
  std::size_t classic = 0;
  std::size_t dual_pfaff = 0;
  bool agree = true;
};

struct ProlongReport {
  std::vector<ProlongLevel> levels;
  std::map<int, GradedComponentBasis> components;  // the dual-Pfaff result in positive degrees
  bool agree() const {
    for (const auto& l : levels)
      if (!l.agree) return false;
    return true;
  }
};

/// Dimensions from the table for k <= 0, both constructions for 0 < k <= max_degree.
inline ProlongReport prolong(const Preset& p, int max_degree) {
  ProlongReport rep;
  const int dmin = -p.system()->max_weight();
  for (int k = dmin; k <= std::min(max_degree, 0); ++k) {
    auto c = table_component(p, k);
    rep.levels.push_back({k, c.dimension(), c.dimension(), c.dimension(), true});
    rep.components.emplace(k, std::move(c));
  }
  for (int k = 1; k <= max_degree; ++k) {
    auto classic = prolong_classic(p.system(), rep.components.at(-1), rep.components.at(k - 1), k);
    auto dual = prolong_dual_pfaff(p, k);
    FieldIndex idx(p.system(), k);
    const bool agree = span_in(idx, classic.basis) == span_in(idx, dual.basis);
    rep.levels.push_back({k, 0, classic.dimension(), dual.dimension(), agree});
    rep.components.emplace(k, std::move(dual));
  }
  return rep;
}

/// Generating function of a field in the algebra; throws otherwise.
inline FunctionData invert_generating_function(const Preset& p, const VectorField& x) {
  if (!dual_pfaff_check(x, p.dual_pfaff_basis()).ok()) throw Error(p.tag() + ": field is not in the algebra");
  for (const auto& r : p.extra_constraints(x))
    if (!r.value.is_zero()) throw Error(p.tag() + ": field violates " + r.name);
  FunctionData f = p.invert(x);
  for (const auto& r : p.symmetry_residuals(f))
    if (!r.value.is_zero()) throw Error(p.tag() + ": recovered function violates " + r.name);
  if (!(p.build_unchecked(f) == x)) throw Error(p.tag() + ": field is not in the algebra");
  return f;
}

}  // namespace superfield
