#pragma once

/**
 * @file verify.hpp
 * @brief Named check suites over a preset.
 *
 * Every check is exact. On failure the detail names the generator or
 * sample and prints the first nonzero residual. Random inputs come from a
 * single seed, so a run is reproducible byte for byte.
 */

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superfield/abstract.hpp"
#include "superfield/prolong.hpp"
#include "superfield/registry.hpp"

namespace superfield {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int samples = 10;
  int max_weight = 4;
};

/// First nonzero entry of [L_X, L_Y] - L_[X,Y] on a representation.
inline std::optional<std::string> rep_defect(const Preset& p, const TensorRep& rep, const VectorField& x,
                                             const VectorField& y) {
  const Rational s(bit(x.parity_or()) * bit(y.parity_or()) != 0 ? -1 : 1);
  auto cx = p.tensor_coefficients(x, rep);
  auto cy = p.tensor_coefficients(y, rep);
  auto cxy = p.tensor_coefficients(vf_bracket(x, y), rep);
  for (std::size_t a = 0; a < rep.dim; ++a)
    for (std::size_t b = 0; b < rep.dim; ++b) {
      Poly r = cxy[a][b] - vf_apply(x, cy[a][b]) + vf_apply(y, cx[a][b]) * s;
      for (std::size_t c = 0; c < rep.dim; ++c) r -= cx[a][c] * cy[c][b] - cy[a][c] * cx[c][b] * s;
      if (!r.is_zero())
        return rep.name + " entry (" + std::to_string(a) + "," + std::to_string(b) + "): " + to_string(r);
    }
  return std::nullopt;
}

/// [build f, build g] - build [f, g], if nonzero.
inline std::optional<std::string> homomorphism_defect(const Preset& p, const FunctionData& f, const FunctionData& g) {
  VectorField d = vf_bracket(p.build(f), p.build(g)) - p.build_unchecked(p.function_bracket(f, g));
  if (d.is_zero()) return std::nullopt;
  return to_string(d);
}

inline std::optional<std::string> first_residual(const std::vector<NamedPoly>& rs) {
  for (const auto& r : rs)
    if (!r.value.is_zero()) return r.name + " = " + to_string(r.value);
  return std::nullopt;
}

namespace detail {

inline FunctionData random_valid(const Preset& p, Rng& rng, int max_weight) {
  return p.random_function(rng, rng.coin() ? Parity::Odd : Parity::Even, max_weight, 2);
}

inline CheckResult check_dimensions(const Preset& p, const VerifyOptions&) {
  CheckResult r{"dimensions", true, {}};
  std::map<int, int> dims;
  for (const auto& g : p.generators()) {
    auto d = vf_degree(g.field);
    if (!d) return {"dimensions", false, g.name + " is not homogeneous"};
    ++dims[*d];
  }
  std::ostringstream os;
  for (const auto& [k, n] : dims) os << (os.tellp() > 0 ? " " : "") << k << ":" << n;
  r.detail = os.str();
  if (dims != p.table_dimensions()) r = {"dimensions", false, "table has " + os.str()};
  // The listed fields must also be independent.
  for (const auto& [k, n] : dims)
    if (table_component(p, k).dimension() != static_cast<std::size_t>(n))
      return {"dimensions", false, "generators of degree " + std::to_string(k) + " are dependent"};
  return r;
}

/// The table's span is closed in non-positive degrees.
inline CheckResult check_closure(const Preset& p, const VerifyOptions&) {
  const auto gs = p.generators();
  const int lo = -p.system()->max_weight();
  std::map<int, GradedComponentBasis> comps;
  for (int k = lo; k <= 0; ++k) comps.emplace(k, table_component(p, k));
  for (const auto& x : gs)
    for (const auto& y : gs) {
      VectorField z = vf_bracket(x.field, y.field);
      if (z.is_zero()) continue;
      const int k = *vf_degree(x.field) + *vf_degree(y.field);
      FieldIndex idx(p.system(), k);
      if (k < lo || !span_in(idx, comps.at(k).basis).contains(idx.encode(z)))
        return {"closure", false, "[" + x.name + ", " + y.name + "] = " + to_string(z)};
    }
  return {"closure", true, std::to_string(gs.size()) + " generators"};
}

inline CheckResult check_pfaff(const Preset& p, const VerifyOptions&) {
  std::size_t n = 0;
  for (const auto& g : p.generators())
    for (const auto& [sname, forms] : p.pfaff_systems()) {
      auto cert = pfaff_check(g.field, forms);
      for (std::size_t i = 0; i < forms.size(); ++i)
        if (!cert.residuals[i].is_zero())
          return {"pfaff", false, g.name + ": L_X " + forms[i].name + " leaves " + to_string(cert.residuals[i])};
      ++n;
    }
  return {"pfaff", true, std::to_string(n) + " generator/system pairs"};
}

inline CheckResult check_dual_pfaff(const Preset& p, const VerifyOptions&) {
  const auto basis = p.dual_pfaff_basis();
  const auto gs = p.generators();
  for (const auto& g : gs) {
    auto cert = dual_pfaff_check(g.field, basis);
    for (std::size_t a = 0; a < basis.size(); ++a)
      if (!cert.residuals[a].is_zero())
        return {"dual-pfaff", false, g.name + ": [X, " + basis[a].name + "] leaves " + to_string(cert.residuals[a])};
  }
  // Tilde generators commute with the negative part.
  for (const auto& t : p.tilde_generators())
    for (const auto& g : gs) {
      if (*vf_degree(g.field) >= 0) continue;
      VectorField z = vf_bracket(t.field, g.field);
      if (!z.is_zero()) return {"dual-pfaff", false, "[" + t.name + ", " + g.name + "] = " + to_string(z)};
    }
  return {"dual-pfaff", true, std::to_string(gs.size()) + " generators"};
}

inline CheckResult check_functions(const Preset& p, const VerifyOptions&) {
  const auto gs = p.generators();
  for (const auto& [name, f] : p.table_functions()) {
    const Generator* g = nullptr;
    for (const auto& c : gs)
      if (c.name == name) g = &c;
    if (!g) return {"functions", false, "no generator " + name};
    if (auto bad = first_residual(p.symmetry_residuals(f))) return {"functions", false, name + ": " + *bad};
    VectorField d = p.build(f) - g->field;
    if (!d.is_zero()) return {"functions", false, name + ": built field differs by " + to_string(d)};
    FunctionData back = invert_generating_function(p, g->field);
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!(back[i] == f[i])) return {"functions", false, name + ": inversion gives " + to_string(back[i])};
  }
  return {"functions", true, std::to_string(p.table_functions().size()) + " rows"};
}

inline CheckResult check_conditions(const Preset& p, const VerifyOptions& o) {
  for (const auto& g : p.generators())
    if (auto bad = first_residual(p.condition_residuals(g.field))) return {"conditions", false, g.name + ": " + *bad};
  Rng rng(o.seed);
  for (int n = 0; n < o.samples; ++n) {
    FunctionData f = random_valid(p, rng, o.max_weight);
    if (auto bad = first_residual(p.condition_residuals(p.build(f))))
      return {"conditions", false, "sample " + std::to_string(n) + ": " + *bad};
  }
  return {"conditions", true, "table and " + std::to_string(o.samples) + " samples"};
}

inline CheckResult check_homomorphism(const Preset& p, const VerifyOptions& o) {
  Rng rng(o.seed + 1);
  for (int n = 0; n < o.samples; ++n) {
    FunctionData f = random_valid(p, rng, o.max_weight);
    FunctionData g = random_valid(p, rng, o.max_weight);
    if (auto bad = homomorphism_defect(p, f, g)) return {"homomorphism", false, "pair " + std::to_string(n) + ": " + *bad};
  }
  return {"homomorphism", true, std::to_string(o.samples) + " pairs"};
}

inline CheckResult check_tensor(const Preset& p, const VerifyOptions& o, bool conjectural) {
  const std::string name = conjectural ? "vleguess" : "tensor";
  Rng rng(o.seed + 2);
  std::size_t reps = 0;
  for (const auto& rep : p.tensor_reps()) {
    if (rep.conjectural != conjectural) continue;
    ++reps;
    for (int n = 0; n < o.samples; ++n) {
      VectorField x = p.build(random_valid(p, rng, o.max_weight));
      VectorField y = p.build(random_valid(p, rng, o.max_weight));
      if (auto bad = rep_defect(p, rep, x, y)) return {name, false, "pair " + std::to_string(n) + ": " + *bad};
    }
  }
  std::string d = std::to_string(reps) + " rep(s), " + std::to_string(o.samples) + " pairs each";
  if (conjectural) d += "; conjectural term holds on these samples";
  return {name, true, d};
}

/// Simple ksle: divQ = 0 on every table generator of the extended algebra except Z.
inline CheckResult check_divq(const Preset&, const VerifyOptions&) {
  KslePreset simple(false);
  KslePreset bar(true);
  std::string excluded;
  for (const auto& g : bar.generators()) {
    const Poly div = simple.extra_constraints(g.field).front().value;
    if (g.name == "Z") {
      if (div.is_zero()) return {"divQ", false, "Z is not excluded"};
      excluded = "Z correctly excluded (divQ = " + to_string(div) + ")";
    } else if (!div.is_zero()) {
      return {"divQ", false, g.name + ": divQ = " + to_string(div)};
    }
  }
  return {"divQ", true, std::to_string(bar.generators().size() - 1) + " generators pass; " + excluded};
}

inline CheckResult check_kas_filter(const Preset& p, const VerifyOptions&) {
  auto f = kas_filter(dynamic_cast<const ContactPreset&>(p));
  std::ostringstream os;
  os << "degree " << f.degree << ": " << f.other << " + " << f.plus << " + " << f.minus << ", kept " << f.kept.size();
  const bool ok = f.involution && f.other == 6 && f.plus == 10 && f.minus == 10 && f.kept.size() == 16;
  return {"kas-filter", ok, os.str()};
}

inline CheckResult check_abstract(const Preset& p, const VerifyOptions& o) {
  AbstractAlgebra alg(p.tag());
  std::string bad;
  for (const auto& t : abstract_antisymmetry_failures(alg, o.seed, 3)) bad += " antisymmetry:" + t;
  for (const auto& t : abstract_jacobi_failures(alg, o.seed + 1, 2)) bad += " jacobi:" + t;
  if (p.tag() == "mb38") {
    Rng rng(o.seed + 2);
    for (int n = 0; n < o.samples; ++n)
      if (!alg.bracket(alg.random(rng, AbstractKind::G, 3), alg.random(rng, AbstractKind::G, 3)).is_zero()) {
        bad += " GG-nonzero";
        break;
      }
  }
  if (bad.empty()) return {"abstract", true, "antisymmetry and Jacobi on all kind triples"};
  return {"abstract", false, "fails on" + bad};
}

}  // namespace detail

/// Every check that applies to the preset, in reporting order.
inline std::vector<std::string> available_checks(const Preset& p) {
  std::vector<std::string> c{"dimensions", "closure", "pfaff", "dual-pfaff", "functions", "conditions", "homomorphism", "tensor"};
  for (const auto& r : p.tensor_reps())
    if (r.conjectural) {
      c.push_back("vleguess");
      break;
    }
  if (p.tag().rfind("ksle510", 0) == 0) c.push_back("divQ");
  if (p.tag() == "kas16") c.push_back("kas-filter");
  if (p.tag() == "ksle510" || p.tag() == "vle36" || p.tag() == "mb38") c.push_back("abstract");
  return c;
}

/// The default suite: everything except the abstract presentation, which is
/// a separate structure and runs only when asked for.
inline std::vector<std::string> default_checks(const Preset& p) {
  auto c = available_checks(p);
  std::erase(c, "abstract");
  return c;
}

inline CheckResult run_check(const Preset& p, const std::string& name, const VerifyOptions& o = {}) {
  using F = std::function<CheckResult(const Preset&, const VerifyOptions&)>;
  static const std::map<std::string, F> table{
      {"dimensions", detail::check_dimensions},
      {"closure", detail::check_closure},
      {"pfaff", detail::check_pfaff},
      {"dual-pfaff", detail::check_dual_pfaff},
      {"functions", detail::check_functions},
      {"conditions", detail::check_conditions},
      {"homomorphism", detail::check_homomorphism},
      {"tensor", [](const Preset& q, const VerifyOptions& v) { return detail::check_tensor(q, v, false); }},
      {"vleguess", [](const Preset& q, const VerifyOptions& v) { return detail::check_tensor(q, v, true); }},
      {"divQ", detail::check_divq},
      {"kas-filter", detail::check_kas_filter},
      {"abstract", detail::check_abstract},
  };
  const auto avail = available_checks(p);
  if (std::find(avail.begin(), avail.end(), name) == avail.end())
    throw Error("check '" + name + "' does not apply to preset " + p.tag());
  try {
    return table.at(name)(p, o);
  } catch (const Error& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

inline std::vector<CheckResult> verify(const Preset& p, const std::vector<std::string>& names, const VerifyOptions& o = {}) {
  std::vector<CheckResult> out;
  for (const auto& n : names) out.push_back(run_check(p, n, o));
  return out;
}

}  // namespace superfield
