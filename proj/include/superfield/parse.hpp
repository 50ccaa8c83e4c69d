#pragma once

/**
 * @file parse.hpp
 * @brief Text to polynomials, vector fields and forms.
 *
 * Grammar (whitespace ignored):
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ['^' integer]
 *   atom   := integer ['/' integer] | name | 'd/d' name | '(' expr ')' | '-' factor
 *
 * Names are coordinates of the system. A derivation d/d<name> may only be
 * the last factor of a term, so every term reads coeff * d/d<name>. The
 * canonical serializations of Poly, VectorField and DiffForm parse back to
 * equal objects.
 */

#include <cctype>
#include <string>
#include <string_view>

#include "superfield/forms.hpp"

namespace superfield {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error("parse error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

/// Scalar or field value during parsing.
struct Parsed {
  Poly scalar;
  VectorField field;
  bool is_field = false;
};

class Parser {
 public:
  Parser(SystemPtr sys, std::string_view text, bool allow_fields)
      : sys_(std::move(sys)), s_(text), fields_(allow_fields) {}

  Parsed run() {
    Parsed v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string name() {
    const std::size_t b = i_;
    while (i_ < s_.size() && name_char(s_[i_])) ++i_;
    return std::string(s_.substr(b, i_ - b));
  }
  std::string digits() {
    const std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected a number");
    return std::string(s_.substr(b, i_ - b));
  }

  Parsed scalar(Poly p) { return {std::move(p), VectorField(), false}; }

  void add(Parsed& acc, const Parsed& t, bool minus) {
    if (acc.is_field != t.is_field) fail("cannot add a function and a vector field");
    if (acc.is_field) {
      if (minus) acc.field -= t.field;
      else acc.field += t.field;
    } else {
      if (minus) acc.scalar -= t.scalar;
      else acc.scalar += t.scalar;
    }
  }

  Parsed expr() {
    Parsed acc;
    if (eat('-')) {
      acc = term();
      negate(acc);
    } else {
      acc = term();
    }
    for (;;) {
      if (eat('+')) add(acc, term(), false);
      else if (eat('-')) add(acc, term(), true);
      else return acc;
    }
  }

  static void negate(Parsed& v) {
    if (v.is_field) v.field = -v.field;
    else v.scalar = -v.scalar;
  }

  Parsed term() {
    Parsed acc = factor();
    while (eat('*')) {
      if (acc.is_field) fail("d/d<name> must be the last factor of a term");
      Parsed f = factor();
      if (f.is_field) acc = {Poly(sys_), acc.scalar * f.field, true};
      else acc.scalar = acc.scalar * f.scalar;
    }
    return acc;
  }

  Parsed factor() {
    Parsed a = atom();
    if (eat('^')) {
      if (a.is_field) fail("a vector field has no powers");
      skip();
      const std::string e = digits();
      if (e.size() > 3) fail("exponent too large");
      Poly r = Poly::constant(sys_, 1);
      for (int k = std::stoi(e); k > 0; --k) r = r * a.scalar;
      a.scalar = std::move(r);
    }
    return a;
  }

  Parsed atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Parsed v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++i_;
      Parsed v = factor();
      negate(v);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        const std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += "/" + den;
      }
      return scalar(Poly::constant(sys_, parse_rational(num)));
    }
    if (name_start(c)) {
      const std::size_t at = i_;
      std::string n = name();
      if (n == "d" && i_ + 1 < s_.size() && s_[i_] == '/' && s_[i_ + 1] == 'd') {
        if (!fields_) fail("vector fields are not allowed here");
        i_ += 2;
        std::string target = name();
        if (!sys_->contains(target)) {
          i_ = at;
          fail("unknown coordinate '" + target + "'");
        }
        return {Poly(sys_), VectorField::partial(sys_, target), true};
      }
      if (!sys_->contains(n)) {
        i_ = at;
        fail("unknown coordinate '" + n + "'");
      }
      return scalar(Poly::coordinate(sys_, n));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  SystemPtr sys_;
  std::string_view s_;
  bool fields_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const SystemPtr& sys, std::string_view text) {
  return detail::Parser(sys, text, false).run().scalar;
}

/// A field; a plain "0" is the zero field.
inline VectorField parse_field(const SystemPtr& sys, std::string_view text) {
  auto v = detail::Parser(sys, text, true).run();
  if (v.is_field) return v.field;
  if (v.scalar.is_zero()) return VectorField(sys);
  throw ParseError("expected a vector field", 0);
}

/// A form on the base system; differentials are written d<name>.
inline DiffForm parse_form(const SystemPtr& base, std::string_view text) {
  return DiffForm(base, parse_poly(base->forms(), text));
}

/// True if the text contains a derivation, i.e. should parse as a field.
inline bool looks_like_field(std::string_view text) { return text.find("d/d") != std::string_view::npos; }

}  // namespace superfield
