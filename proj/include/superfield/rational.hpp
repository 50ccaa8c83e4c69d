#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Every coefficient in the engine is an arbitrary-precision fraction kept in
 * lowest terms. GMP's mpq_class does the arithmetic; this header adds the
 * handful of helpers the rest of the library needs.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superfield {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

/// Builds n/d in canonical form.
inline Rational make_rational(long n, long d = 1) {
  if (d == 0) throw Error("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical text: "3", "-1/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p", "p/q" exactly; throws on malformed input.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error("malformed rational literal '" + text + "'");
  if (r.get_den() == 0) throw Error("rational with zero denominator");
  r.canonicalize();
  return r;
}

/// (-1)^k as a small integer.
inline int sign_of(std::uint64_t k) { return (k & 1U) != 0 ? -1 : 1; }

}  // namespace superfield
