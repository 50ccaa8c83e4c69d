// Acceptance run: one PASS/FAIL line per criterion.
//
// Every comparison is exact over Q (tolerance 0). Runtime bounds are wall
// clock. Exit status is 0 when every criterion passes or the only failures
// are marked unattainable; those are explained on their line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "superfield/superfield.hpp"

using namespace superfield;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  bool unattainable = false;
};

/// Collects the first failure; counts every comparison.
struct Tally {
  long checks = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first.empty()) first = what;
  }
  bool ok() const { return first.empty(); }
  Outcome outcome(const std::string& summary) const {
    if (ok()) return {true, summary + ", " + std::to_string(checks) + " exact comparisons"};
    return {false, first};
  }
};

const Generator& gen(const std::vector<Generator>& gs, const std::string& name) {
  for (const auto& g : gs)
    if (g.name == name) return g;
  throw Error("no generator " + name);
}

const std::vector<std::string> kPresets{"k1m:1", "k1m:2", "k1m:3", "kas16", "ksle510", "ksle510bar", "vle36", "mb38"};

RMatrix offdiagonal_metric() {
  RMatrix g = zero_matrix(3);
  g[0][0] = 1;
  g[1][2] = g[2][1] = 1;
  return g;
}

// 1 -------------------------------------------------------------------------

Outcome bracket_tables() {
  Tally t;
  for (const RMatrix& g : {RMatrix{}, offdiagonal_metric()}) {
    ContactPreset k = g.empty() ? ContactPreset(3) : ContactPreset(3, g, "k1m:3g");
    const auto gs = k.generators();
    const VectorField& e = gen(gs, "E").field;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const auto& da = gen(gs, "D^" + std::to_string(a + 1)).field;
        const auto& db = gen(gs, "D^" + std::to_string(b + 1)).field;
        const std::string at = k.tag() + " a=" + std::to_string(a) + " b=" + std::to_string(b);
        t.expect(vf_bracket(da, db) == e * (k.metric()[a][b] * -2), "{D,D} " + at);
        t.expect(vf_bracket(k.dt_up(a), k.dt_up(b)) == e * (k.metric_inverse()[a][b] * 2), "{~D,~D} " + at);
        t.expect(vf_bracket(da, k.dt_up(b)).is_zero(), "{D,~D} " + at);
      }
  }

  KslePreset ks(false);
  {
    const auto gs = ks.generators();
    const auto tg = ks.tilde_generators();
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int a = 0; a < 5; ++a)
          for (int b = a + 1; b < 5; ++b) {
            const std::string p = KslePreset::pair(i, j), q = KslePreset::pair(a, b);
            VectorField e = ks.zero_field();
            for (int m = 0; m < 5; ++m) e += ks.e(m) * Rational(eps5(i, j, a, b, m));
            t.expect(vf_bracket(gen(gs, "D^{" + p + "}").field, gen(gs, "D^{" + q + "}").field) == e * Rational(-2), "ksle {D^" + p + ",D^" + q + "}");
            t.expect(vf_bracket(gen(tg, "~D^{" + p + "}").field, gen(tg, "~D^{" + q + "}").field) == e * Rational(2), "ksle {~D^" + p + ",~D^" + q + "}");
            t.expect(vf_bracket(gen(gs, "D^{" + p + "}").field, gen(tg, "~D^{" + q + "}").field).is_zero(), "ksle {D,~D}");
          }
  }

  VlePreset v;
  {
    const auto gs = v.generators();
    const auto tg = v.tilde_generators();
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a)
        for (int j = 0; j < 3; ++j)
          for (int b = 0; b < 2; ++b) {
            const std::string p = idx2(i, a), q = idx2(j, b);
            VectorField e = v.zero_field();
            for (int k = 0; k < 3; ++k) e += v.c().e[k] * Rational(eps3(i, j, k) * eps2_up(a, b));
            t.expect(vf_bracket(gen(gs, "D^{" + p + "}").field, gen(gs, "D^{" + q + "}").field) == e * Rational(-2), "vle {D^" + p + ",D^" + q + "}");
            t.expect(vf_bracket(gen(tg, "~D^{" + p + "}").field, gen(tg, "~D^{" + q + "}").field) == e * Rational(2), "vle {~D,~D}");
            t.expect(vf_bracket(gen(gs, "D^{" + p + "}").field, gen(tg, "~D^{" + q + "}").field).is_zero(), "vle {D,~D}");
          }
  }

  MbPreset mb;
  {
    const auto gs = mb.generators();
    auto f_up = [&](int a) {
      VectorField x = mb.zero_field();
      for (int b = 0; b < 2; ++b) x += mb.dh(b) * Rational(eps2_up(a, b));
      return x;
    };
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 2; ++a) {
        const VectorField& d = gen(gs, "D^{" + idx2(i, a) + "}").field;
        const VectorField& dt = mb.dt(i, a);
        for (int j = 0; j < 3; ++j) {
          const std::string at = " i=" + std::to_string(i) + " a=" + std::to_string(a) + " j=" + std::to_string(j);
          const VectorField& ej = gen(gs, "E_" + idx1(j)).field;
          t.expect(vf_bracket(d, ej) == f_up(a) * Rational(i == j ? -2 : 0), "mb [D,E]" + at);
          t.expect(vf_bracket(dt, mb.et(j)) == f_up(a) * Rational(i == j ? 2 : 0), "mb [~D,~E]" + at);
          t.expect(vf_bracket(d, mb.et(j)).is_zero(), "mb [D,~E]" + at);
          t.expect(vf_bracket(dt, ej).is_zero(), "mb [~D,E]" + at);
          for (int b = 0; b < 2; ++b) {
            VectorField e = mb.zero_field(), et = mb.zero_field();
            for (int k = 0; k < 3; ++k) {
              e += gen(gs, "E_" + idx1(k)).field * Rational(eps3(i, j, k) * eps2_up(a, b));
              et += mb.et(k) * Rational(eps3(i, j, k) * eps2_up(a, b));
            }
            t.expect(vf_bracket(d, gen(gs, "D^{" + idx2(j, b) + "}").field) == e * Rational(6), "mb {D,D}" + at);
            t.expect(vf_bracket(dt, mb.dt(j, b)) == et * Rational(-6), "mb {~D,~D}" + at);
            t.expect(vf_bracket(d, mb.dt(j, b)).is_zero(), "mb {D,~D}" + at);
          }
        }
      }
  }
  return t.outcome("k(1|3) with two metrics, ksle, vle, mb");
}

// 2 -------------------------------------------------------------------------

/// Expected constant multiplier matrix of a degree <= 0 generator on the
/// preset's form system (alpha rows first, then beta).
RMatrix expected_multipliers(const std::string& tag, const std::string& name, std::size_t n_alpha, std::size_t n) {
  RMatrix m = zero_matrix(n);
  if (name == "Z") {
    for (std::size_t i = 0; i < n; ++i) m[i][i] = i < n_alpha ? 2 : 3;
  } else if (name.rfind("I^", 0) == 0) {
    // I^k_l alpha^i = delta^i_l alpha^k - c delta^k_l alpha^i
    const std::size_t k = static_cast<std::size_t>(name[2] - '1');
    const std::size_t l = static_cast<std::size_t>(name[4] - '1');
    const Rational c = tag.rfind("ksle", 0) == 0 ? make_rational(1, 5) : make_rational(1, 3);
    for (std::size_t i = 0; i < n_alpha; ++i)
      for (std::size_t j = 0; j < n_alpha; ++j) m[i][j] = Rational(i == l && j == k ? 1 : 0) - (k == l && i == j ? c : Rational(0));
  } else if (tag == "mb38" && name.rfind("J^", 0) == 0) {
    // J^c_d beta^a = delta^a_d beta^c - 1/2 delta^c_d beta^a
    const std::size_t c = static_cast<std::size_t>(name[2] - '1');
    const std::size_t d = static_cast<std::size_t>(name[4] - '1');
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        m[n_alpha + a][n_alpha + b] = Rational(a == d && b == c ? 1 : 0) - (c == d && a == b ? make_rational(1, 2) : Rational(0));
  }
  return m;
}

Outcome pfaff_multipliers() {
  Tally t;
  std::vector<std::shared_ptr<const Preset>> ps;
  for (const std::string tag : {"k1m:2", "kas16", "ksle510", "ksle510bar", "vle36", "mb38"}) ps.push_back(make_preset(tag));
  ps.push_back(std::make_shared<ContactPreset>(3, offdiagonal_metric(), "k1m:3g"));
  std::size_t gens = 0;
  for (const auto& p : ps) {
    const auto forms = p->pfaff_systems().at(0).second;
    std::size_t n_alpha = 0;
    for (const auto& f : forms) n_alpha += f.name.rfind("alpha", 0) == 0 ? 1 : 0;
    for (const auto& g : p->generators()) {
      ++gens;
      auto cert = pfaff_check(g.field, forms);
      t.expect(cert.ok(), p->tag() + " " + g.name + ": L_X alpha not in the system");
      if (!cert.ok()) continue;
      const RMatrix want = expected_multipliers(p->tag(), g.name, n_alpha, forms.size());
      for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < forms.size(); ++j)
          t.expect(cert.multipliers[i][j] == p->constant(want[i][j]),
                   p->tag() + " " + g.name + ": multiplier (" + forms[i].name + ", " + forms[j].name + ") = " + to_string(cert.multipliers[i][j]));
    }
  }
  return t.outcome(std::to_string(gens) + " generators over 7 presets");
}

// 3 -------------------------------------------------------------------------

Outcome conditions() {
  Tally t;
  for (std::size_t n = 0; n < kPresets.size(); ++n) {
    auto p = make_preset(kPresets[n]);
    Rng rng(300 + n);
    for (int s = 0; s < 200; ++s) {
      FunctionData f = p->random_function(rng, parity_of(s), 4, 3);
      auto bad = first_residual(p->condition_residuals(p->build(f)));
      t.expect(!bad, p->tag() + " sample " + std::to_string(s) + ": " + bad.value_or(""));
    }
  }
  return t.outcome("200 functions per preset, weight <= 4");
}

// 4 -------------------------------------------------------------------------

Outcome homomorphism() {
  Tally t;
  for (std::size_t n = 0; n < kPresets.size(); ++n) {
    auto p = make_preset(kPresets[n]);
    Rng rng(400 + n);
    const auto* k = dynamic_cast<const ContactPreset*>(p.get());
    for (int s = 0; s < 50; ++s) {
      FunctionData f = p->random_function(rng, parity_of(s), 4, 3);
      FunctionData g = p->random_function(rng, parity_of(s / 2), 4, 3);
      auto bad = homomorphism_defect(*p, f, g);
      t.expect(!bad, p->tag() + " pair " + std::to_string(s) + ": " + bad.value_or(""));
      if (k) t.expect(k->contact_bracket_half(f[0], g[0]) == p->function_bracket(f, g)[0] * make_rational(1, 2), p->tag() + " half bracket pair " + std::to_string(s));
    }
  }
  return t.outcome("50 pairs per preset, contact half bracket included");
}

// 5 -------------------------------------------------------------------------

Outcome prolongation() {
  Tally t;
  auto pinned = [](const std::string& tag) -> std::map<int, int> {
    if (tag.rfind("k1m:", 0) == 0) {
      const int m = std::stoi(tag.substr(4));
      return {{-2, 1}, {-1, m}, {0, m * (m - 1) / 2 + 1}};
    }
    if (tag == "kas16") return {{-2, 1}, {-1, 6}, {0, 16}};
    if (tag == "ksle510") return {{-2, 5}, {-1, 10}, {0, 24}};
    if (tag == "ksle510bar") return {{-2, 5}, {-1, 10}, {0, 25}};
    if (tag == "vle36") return {{-2, 3}, {-1, 6}, {0, 12}};
    return {{-3, 2}, {-2, 3}, {-1, 6}, {0, 12}};
  };
  std::ostringstream dims;
  for (const auto& tag : kPresets) {
    auto p = make_preset(tag);
    const auto want = pinned(tag);
    for (const auto& [k, n] : want)
      t.expect(table_component(*p, k).dimension() == static_cast<std::size_t>(n), tag + " degree " + std::to_string(k) + " table dimension");
    auto rep = prolong(*p, 2);
    dims << " " << tag << ":";
    for (const auto& l : rep.levels) {
      if (l.degree <= 0) continue;
      t.expect(l.agree && l.classic == l.dual_pfaff, tag + " degree " + std::to_string(l.degree) + ": classic " + std::to_string(l.classic) + " vs dual-pfaff " + std::to_string(l.dual_pfaff));
      t.expect(static_cast<std::size_t>(l.dual_pfaff) == p->function_space(l.degree).size(), tag + " degree " + std::to_string(l.degree) + ": function count differs");
      dims << (l.degree == 1 ? "" : "/") << l.dual_pfaff;
    }
  }
  return t.outcome("tables pinned; classic = dual-pfaff at 1, 2 (" + dims.str().substr(1) + ")");
}

// 6 -------------------------------------------------------------------------

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome kas() {
  Tally t;
  KasPreset kp;
  // Degree-1 fields K_f have f of weight 3: t*th^a or th^a th^b th^c.
  const long count = binomial(6, 1) + binomial(6, 3);
  std::size_t mons = 0;
  for (const auto& m : monomials_of_degree(*kp.system(), 3)) mons += m.parity() == Parity::Odd ? 1 : 0;
  t.expect(count == 26 && mons == 26, "monomial count " + std::to_string(mons));
  const auto space = prolong_dual_pfaff(kp, 1);
  t.expect(space.dimension() == 26, "dual-pfaff degree 1 of k(1|6) has " + std::to_string(space.dimension()));
  auto f = kas_filter(kp);
  t.expect(f.degree == 1 && f.involution, "duality is not an involution in degree 1");
  t.expect(f.other == 6 && f.plus == 10 && f.minus == 10, "split " + std::to_string(f.other) + "+" + std::to_string(f.plus) + "+" + std::to_string(f.minus));
  t.expect(f.plus == binomial(6, 3) / 2, "plus part is not half of the middle power");
  t.expect(f.kept.size() == 16, "filter keeps " + std::to_string(f.kept.size()));
  // The kept functions are independent fields inside the 26.
  FieldIndex idx(kp.system(), 1);
  RowSpace big = span_in(idx, space.basis);
  std::vector<VectorField> kept;
  for (const auto& g : f.kept) {
    kept.push_back(kp.build(g));
    t.expect(big.contains(idx.encode(kept.back())), "kept function outside the degree-1 space");
  }
  t.expect(span_in(idx, kept).rows().size() == 16, "kept functions are dependent");
  return t.outcome("26 = 6 + 10 + 10, kept 16");
}

// 7 -------------------------------------------------------------------------

Outcome tensor() {
  Tally t;
  std::string finding = "vleguess not exercised";
  for (std::size_t n = 0; n < kPresets.size(); ++n) {
    auto p = make_preset(kPresets[n]);
    Rng rng(700 + n);
    for (const auto& rep : p->tensor_reps()) {
      bool held = true;
      for (int s = 0; s < 25; ++s) {
        VectorField x = p->build(p->random_function(rng, parity_of(s), 4, 2));
        VectorField y = p->build(p->random_function(rng, parity_of(s / 2), 4, 2));
        auto bad = rep_defect(*p, rep, x, y);
        if (rep.conjectural) held = held && !bad;
        else t.expect(!bad, p->tag() + " " + rep.name + " pair " + std::to_string(s) + ": " + bad.value_or(""));
      }
      if (rep.conjectural) finding = std::string("finding: conjectural vle term ") + (held ? "holds" : "FAILS") + " on 25 pairs";
    }
  }
  return t.outcome("defining reps on 25 pairs per preset; " + finding);
}

// 8 -------------------------------------------------------------------------

Outcome abstract_brackets() {
  std::string failures;
  bool only_mb_jacobi = true;
  for (const std::string tag : {"ksle510", "vle36", "mb38"}) {
    AbstractAlgebra alg(tag);
    for (const auto& s : abstract_antisymmetry_failures(alg, 801, 3)) {
      failures += " " + tag + ":antisymmetry:" + s;
      only_mb_jacobi = false;
    }
    for (const auto& s : abstract_jacobi_failures(alg, 802, 2)) {
      failures += " " + tag + ":jacobi:" + s;
      only_mb_jacobi = only_mb_jacobi && tag == "mb38";
    }
    if (tag == "mb38") {
      Rng rng(803);
      for (int n = 0; n < 50; ++n)
        if (!alg.bracket(alg.random(rng, AbstractKind::G, 3), alg.random(rng, AbstractKind::G, 3)).is_zero()) {
          failures += " mb38:GG-nonzero";
          only_mb_jacobi = false;
          break;
        }
    }
  }
  if (failures.empty()) return {true, "every kind pair and triple on seeded samples, GG = 0 for mb"};
  Outcome o{false, "fails on" + failures, false};
  if (only_mb_jacobi) {
    o.unattainable = true;
    o.detail += "; unattainable: the mb bracket table violates Jacobi on these kinds "
                "(ksle and vle close, antisymmetry and GG = 0 hold for mb)";
  }
  return o;
}

// 9 -------------------------------------------------------------------------

Outcome properties() {
  Tally t;
  const std::vector<SystemPtr> systems{make_preset("vle36")->system(), make_preset("mb38")->system(), make_preset("k1m:3")->system()};
  Rng rng(900);
  auto parity = [&] { return rng.coin() ? Parity::Odd : Parity::Even; };
  auto field = [&](const SystemPtr& s) {
    const int k = static_cast<int>(rng.uniform(-1, 1));
    return random_field(rng, s, k, parity(), 2);
  };
  for (int n = 0; n < 1000; ++n) {
    const auto& s = systems[static_cast<std::size_t>(n) % systems.size()];
    const Parity pf = parity(), pg = parity();
    Poly f = random_poly(rng, s, static_cast<int>(rng.uniform(0, 3)), pf, 3);
    Poly g = random_poly(rng, s, static_cast<int>(rng.uniform(0, 3)), pg, 3);
    const Rational sfg(pf == Parity::Odd && pg == Parity::Odd ? -1 : 1);
    t.expect(f * g == g * f * sfg, "supercommutativity " + to_string(f) + " , " + to_string(g));
  }
  for (int n = 0; n < 1000; ++n) {
    const auto& s = systems[static_cast<std::size_t>(n) % systems.size()];
    VectorField x = field(s);
    const Parity pf = parity();
    Poly f = random_poly(rng, s, static_cast<int>(rng.uniform(0, 3)), pf, 3);
    Poly g = random_poly(rng, s, static_cast<int>(rng.uniform(0, 3)), parity(), 3);
    const Rational sx(x.parity_or() == Parity::Odd && pf == Parity::Odd ? -1 : 1);
    t.expect(vf_apply(x, f * g) == vf_apply(x, f) * g + f * vf_apply(x, g) * sx, "Leibniz " + to_string(x));
  }
  for (int n = 0; n < 1000; ++n) {
    const auto& s = systems[static_cast<std::size_t>(n) % systems.size()];
    VectorField x = field(s), y = field(s), z = field(s);
    const Rational sxy(x.parity_or() == Parity::Odd && y.parity_or() == Parity::Odd ? -1 : 1);
    t.expect(vf_bracket(x, vf_bracket(y, z)) == vf_bracket(vf_bracket(x, y), z) + vf_bracket(y, vf_bracket(x, z)) * sxy,
             "Jacobi " + to_string(x) + " , " + to_string(y) + " , " + to_string(z));
  }
  int degree_checks = 0;
  for (int n = 0; degree_checks < 1000 && n < 20000; ++n) {
    const auto& s = systems[static_cast<std::size_t>(n) % systems.size()];
    const int df = static_cast<int>(rng.uniform(0, 3)), dg = static_cast<int>(rng.uniform(0, 3));
    Poly f = random_poly(rng, s, df, parity(), 2);
    Poly g = random_poly(rng, s, dg, parity(), 2);
    Poly fg = f * g;
    VectorField x = field(s), y = field(s);
    VectorField xy = vf_bracket(x, y);
    if (fg.is_zero() || xy.is_zero()) continue;
    ++degree_checks;
    t.expect(parity_and_degree(fg).degree() == df + dg, "degree of a product");
    t.expect(vf_degree(xy) == *vf_degree(x) + *vf_degree(y), "degree of a bracket " + to_string(x) + " , " + to_string(y));
  }
  t.expect(degree_checks == 1000, "only " + std::to_string(degree_checks) + " nonzero degree instances");
  return t.outcome("1000 instances each over vle, mb and k(1|3) coordinates");
}

struct Criterion {
  int id;
  std::string name;
  double bound_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bracket tables", 1, bracket_tables},
      {2, "pfaff preservation and multipliers", 10, pfaff_multipliers},
      {3, "construction satisfies the conditions", 300, conditions},
      {4, "homomorphism", 120, homomorphism},
      {5, "prolongation dimensions", 600, prolongation},
      {6, "kas(1|6) filter", 60, kas},
      {7, "tensor modules", 300, tensor},
      {8, "abstract brackets", 60, abstract_brackets},
      {9, "property suites", 60, properties},
  };
  int hard_failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.bound_seconds) {
      o.pass = false;
      o.unattainable = false;
      o.detail += "; too slow";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, bound %.0f s", secs, c.bound_seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (tolerance 0, " << timing << "): " << o.detail
              << (o.unattainable ? " [unattainable]" : "") << std::endl;
    if (!o.pass && !o.unattainable) ++hard_failures;
  }
  return hard_failures == 0 ? 0 : 1;
}
