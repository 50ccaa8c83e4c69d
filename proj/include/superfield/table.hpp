#pragma once

/**
 * @file table.hpp
 * @brief Generator and Pfaff tables as text rows, and naming of fields.
 *
 * A field is named by decomposing it over the display basis: the table
 * generators followed by the tilde generators. mb shows F with its index
 * raised, F^1 = F_2 and F^2 = -F_1, as the bracket relations are written
 * that way.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superfield/parse.hpp"
#include "superfield/prolong.hpp"

namespace superfield {

inline std::vector<Generator> display_basis(const Preset& p) {
  std::vector<Generator> out;
  for (auto g : p.generators()) {
    if (p.tag() == "mb38" && g.name == "F_1") {
      out.push_back({"F^2", -g.field});
      continue;
    }
    if (p.tag() == "mb38" && g.name == "F_2") {
      out.push_back({"F^1", g.field});
      continue;
    }
    out.push_back(std::move(g));
  }
  for (auto& t : p.tilde_generators()) out.push_back(std::move(t));
  return out;
}

/// Field or polynomial looked up by display name.
inline std::optional<VectorField> named_field(const Preset& p, const std::string& name) {
  for (const auto& g : display_basis(p))
    if (g.name == name) return g.field;
  for (const auto& g : p.generators())
    if (g.name == name) return g.field;
  return std::nullopt;
}

using Combination = std::vector<std::pair<std::string, Rational>>;

/// x as a combination of display-basis elements of its degree, if possible.
inline std::optional<Combination> decompose(const Preset& p, const VectorField& x) {
  if (x.is_zero()) return Combination{};
  auto k = vf_degree(x);
  if (!k) return std::nullopt;
  FieldIndex idx(p.system(), *k);
  const int n = idx.size();
  // Rows [g | e_j]; reducing [x | 0] leaves [0 | -c] when x = sum c_j g_j.
  RowSpace rows;
  std::vector<std::string> names;
  for (const auto& g : display_basis(p)) {
    if (vf_degree(g.field) != k) continue;
    SparseVec v = idx.encode(g.field);
    v.emplace_back(n + static_cast<int>(names.size()), Rational(1));
    // Skip names dependent on earlier ones.
    SparseVec probe = rows.reduce(v);
    if (probe.front().first >= n) continue;
    rows.insert(std::move(v));
    names.push_back(g.name);
  }
  SparseVec r = rows.reduce(idx.encode(x));
  if (!r.empty() && r.front().first < n) return std::nullopt;
  Combination out;
  for (const auto& [col, c] : r) out.emplace_back(names[static_cast<std::size_t>(col - n)], -c);
  return out;
}

inline std::string to_string(const Combination& c) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& [name, v] = c[i];
    const Rational a = abs(v);
    if (i == 0) out += sgn(v) < 0 ? "-" : "";
    else out += sgn(v) < 0 ? " - " : " + ";
    if (a != 1) out += a.get_str() + "*";
    out += name;
  }
  return out;
}

/// Named combination when one exists, the raw field otherwise.
inline std::string display(const Preset& p, const VectorField& x) {
  if (auto c = decompose(p, x)) return to_string(*c);
  return to_string(x);
}

struct TableRow {
  std::string name;
  int degree = 0;
  Parity parity = Parity::Even;
  std::string text;
};

inline std::vector<TableRow> generator_rows(const Preset& p, bool tilde = false) {
  std::vector<TableRow> out;
  for (const auto& g : tilde ? p.tilde_generators() : p.generators())
    out.push_back({g.name, vf_degree(g.field).value_or(0), g.field.parity_or(), to_string(g.field)});
  return out;
}

/// Generating functions; several components print as "f^1 = ...; f^2 = ...".
inline std::vector<TableRow> function_rows(const Preset& p) {
  std::vector<TableRow> out;
  const auto gs = p.generators();
  for (const auto& [name, f] : p.table_functions()) {
    std::string text;
    if (f.size() == 1) {
      text = to_string(f[0]);
    } else {
      for (std::size_t i = 0; i < f.size(); ++i)
        text += (i ? "; " : "") + std::string("f^") + std::to_string(i + 1) + " = " + to_string(f[i]);
    }
    int deg = 0;
    Parity par = Parity::Even;
    for (const auto& g : gs)
      if (g.name == name) {
        deg = vf_degree(g.field).value_or(0);
        par = g.field.parity_or();
      }
    out.push_back({name, deg, par, text});
  }
  return out;
}

struct PfaffRow {
  std::string system;
  std::string name;
  std::string text;
};

inline std::vector<PfaffRow> pfaff_rows(const Preset& p) {
  std::vector<PfaffRow> out;
  for (const auto& [sname, forms] : p.pfaff_systems())
    for (const auto& f : forms) out.push_back({sname, f.name, to_string(f.form)});
  return out;
}

}  // namespace superfield
