// superfield: verify, prolong, bracket and table on the built-in presets.
//
// Exit status: 0 when everything requested passed, 1 when a check failed or
// the two prolongation methods disagree, 2 on bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "superfield/superfield.hpp"

using namespace superfield;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;

struct Config {
  std::string preset;
  std::string format = "text";
  std::uint64_t seed = 1;
  int samples = 10;
  int max_degree = 2;
  bool no_cap = false;
  bool basis = false;
  bool timing = false;
  std::vector<std::string> checks;
  std::string what = "generators";
  std::string left, right;
};

const char* parity_name(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_verify(const Config& c) {
  auto p = make_preset(c.preset);
  const auto names = c.checks.empty() ? default_checks(*p) : c.checks;
  VerifyOptions o;
  o.seed = c.seed;
  o.samples = c.samples;
  auto results = verify(*p, names, o);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (c.format == "json") {
    ordered_json j{{"schema", 1}, {"command", "verify"}, {"preset", p->tag()}, {"seed", c.seed}, {"samples", c.samples}};
    j["checks"] = ordered_json::array();
    for (const auto& r : results) j["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["pass"] = ok;
    emit(j);
  } else {
    std::cout << "preset " << p->tag() << " (seed " << c.seed << ")\n";
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.pass ? 1 : 0;
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    }
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? 0 : 1;
}

ordered_json basis_json(const GradedComponentBasis& b) {
  ordered_json a = ordered_json::array();
  for (const auto& x : b.basis) a.push_back(to_string(x));
  return a;
}

int cmd_prolong(const Config& c) {
  if (c.max_degree > 3 && !c.no_cap) {
    std::cerr << "error: --max-degree above 3 needs --no-cap\n";
    return kUsage;
  }
  auto p = make_preset(c.preset);
  const auto t0 = std::chrono::steady_clock::now();
  auto rep = prolong(*p, c.max_degree);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.format == "json") {
    ordered_json j{{"schema", 1}, {"command", "prolong"}, {"preset", p->tag()}, {"max_degree", c.max_degree}};
    j["degrees"] = ordered_json::array();
    for (const auto& l : rep.levels) {
      ordered_json r{{"degree", l.degree}};
      if (l.degree <= 0) {
        r["method"] = "table";
        r["dimension"] = l.table;
      } else {
        r["method"] = "classic+dual-pfaff";
        r["dimension"] = l.dual_pfaff;
        r["classic"] = l.classic;
        r["dual_pfaff"] = l.dual_pfaff;
        r["agree"] = l.agree;
      }
      if (c.basis) r["basis"] = basis_json(rep.components.at(l.degree));
      j["degrees"].push_back(r);
    }
    j["agree"] = rep.agree();
    if (c.timing) j["elapsed_seconds"] = secs;
    emit(j);
  } else {
    std::cout << "preset " << p->tag() << "\n";
    for (const auto& l : rep.levels) {
      std::cout << "degree " << l.degree << ": ";
      if (l.degree <= 0) std::cout << l.table << " (table)\n";
      else
        std::cout << l.dual_pfaff << " (classic " << l.classic << ", dual-pfaff " << l.dual_pfaff << ", "
                  << (l.agree ? "same space" : "DIFFERENT spaces") << ")\n";
      if (c.basis)
        for (const auto& x : rep.components.at(l.degree).basis) std::cout << "  " << to_string(x) << "\n";
    }
    if (c.timing) std::cout << "elapsed " << secs << " s\n";
  }
  return rep.agree() ? 0 : 1;
}

/// A generator name, a field expression or, failing both, a function.
struct Operand {
  bool is_field = false;
  VectorField field;
  Poly function;
};

Operand read_operand(const Preset& p, const std::string& text) {
  if (auto f = named_field(p, text)) return {true, *f, {}};
  if (looks_like_field(text)) return {true, parse_field(p.system(), text), {}};
  return {false, {}, parse_poly(p.system(), text)};
}

int cmd_bracket(const Config& c) {
  auto p = make_preset(c.preset);
  Operand a = read_operand(*p, c.left);
  Operand b = read_operand(*p, c.right);
  std::string result, kind;
  if (a.is_field && b.is_field) {
    if ((!a.field.is_zero() && !a.field.parity()) || (!b.field.is_zero() && !b.field.parity())) throw Error("bracket needs parity-homogeneous fields");
    VectorField z = vf_bracket(a.field, b.field);
    result = display(*p, z);
    kind = "field";
  } else if (!a.is_field && !b.is_field) {
    if (p->n_functions() != 1) throw Error("preset " + p->tag() + " has vector-valued generating functions; give fields or names");
    if ((!a.function.is_zero() && !parity_and_degree(a.function).parity()) ||
        (!b.function.is_zero() && !parity_and_degree(b.function).parity()))
      throw Error("bracket needs parity-homogeneous functions");
    result = to_string(p->function_bracket({a.function}, {b.function})[0]);
    kind = "function";
  } else {
    throw Error("cannot bracket a function with a vector field");
  }
  if (c.format == "json") {
    emit({{"schema", 1}, {"command", "bracket"}, {"preset", p->tag()}, {"left", c.left}, {"right", c.right}, {"kind", kind}, {"result", result}});
  } else {
    std::cout << result << "\n";
  }
  return 0;
}

int cmd_table(const Config& c) {
  auto p = make_preset(c.preset);
  const bool all = c.what == "all";
  ordered_json j{{"schema", 1}, {"command", "table"}, {"preset", p->tag()}};
  auto rows_out = [&](const std::string& key, const std::vector<TableRow>& rows) {
    if (c.format == "json") {
      ordered_json a = ordered_json::array();
      for (const auto& r : rows) a.push_back({{"name", r.name}, {"degree", r.degree}, {"parity", parity_name(r.parity)}, {"text", r.text}});
      j[key] = a;
      return;
    }
    std::cout << "# " << key << "\n";
    for (const auto& r : rows) std::cout << r.name << " = " << r.text << "\n";
  };
  if (all || c.what == "generators") rows_out("generators", generator_rows(*p));
  if (all || c.what == "tilde") rows_out("tilde", generator_rows(*p, true));
  if (all || c.what == "functions") rows_out("functions", function_rows(*p));
  if (all || c.what == "pfaff") {
    const auto rows = pfaff_rows(*p);
    if (c.format == "json") {
      ordered_json a = ordered_json::array();
      for (const auto& r : rows) a.push_back({{"system", r.system}, {"name", r.name}, {"text", r.text}});
      j["pfaff"] = a;
    } else {
      std::cout << "# pfaff\n";
      for (const auto& r : rows) std::cout << r.name << " = " << r.text << "\n";
    }
  }
  if (c.format == "json") emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Lie superalgebras of polynomial vector fields"};
  app.require_subcommand(1);
  Config c;
  std::string tags;
  for (const auto& t : preset_tags()) tags += (tags.empty() ? "" : ", ") + t;

  auto common = [&](CLI::App* s) {
    s->add_option("--preset", c.preset, "one of: " + tags)->required();
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify_cmd = app.add_subcommand("verify", "run the check suite of a preset");
  common(verify_cmd);
  verify_cmd->add_option("--seed", c.seed, "seed for random samples");
  verify_cmd->add_option("--samples", c.samples, "random samples per check")->check(CLI::Range(1, 1000));
  verify_cmd->add_option("--check", c.checks, "run only these checks (repeatable)");

  auto* prolong_cmd = app.add_subcommand("prolong", "dimensions of the Cartan prolongation");
  common(prolong_cmd);
  prolong_cmd->add_option("--max-degree", c.max_degree, "highest degree computed")->check(CLI::Range(-3, 12));
  prolong_cmd->add_flag("--no-cap", c.no_cap, "allow --max-degree above 3");
  prolong_cmd->add_flag("--basis", c.basis, "print the basis of every component");
  prolong_cmd->add_flag("--timing", c.timing, "report elapsed time (output no longer reproducible)");

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two generators, fields or functions");
  common(bracket_cmd);
  bracket_cmd->add_option("left", c.left, "generator name or expression")->required();
  bracket_cmd->add_option("right", c.right, "generator name or expression")->required();

  auto* table_cmd = app.add_subcommand("table", "generator, function and Pfaff tables");
  common(table_cmd);
  table_cmd->add_option("--what", c.what, "generators, tilde, functions, pfaff or all")
      ->check(CLI::IsMember({"generators", "tilde", "functions", "pfaff", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(c);
    if (prolong_cmd->parsed()) return cmd_prolong(c);
    if (bracket_cmd->parsed()) return cmd_bracket(c);
    if (table_cmd->parsed()) return cmd_table(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
