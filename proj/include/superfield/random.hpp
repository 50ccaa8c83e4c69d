#pragma once

/**
 * @file random.hpp
 * @brief Seeded generators for random polynomials and fields.
 *
 * Only the raw 64-bit output of std::mt19937_64 is used; the mapping to
 * ranges is done here so that a seed gives the same inputs on every
 * standard library.
 */

#include <random>
#include <vector>

#include "superfield/vector_field.hpp"

namespace superfield {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }
  bool coin() { return (eng_() & 1U) != 0; }

  /// Small nonzero rational p/q with |p| <= 5, 1 <= q <= 3.
  Rational small_rational() {
    long p = uniform(1, 5);
    if (coin()) p = -p;
    return make_rational(p, uniform(1, 3));
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Random homogeneous polynomial of the given degree and parity with up to
/// `terms` terms; zero if no monomial qualifies.
inline Poly random_poly(Rng& rng, const SystemPtr& sys, int degree, Parity parity, int terms = 3) {
  std::vector<Monomial> pool;
  for (const auto& m : monomials_of_degree(*sys, degree))
    if (m.parity() == parity) pool.push_back(m);
  Poly p(sys);
  if (pool.empty()) return p;
  for (int k = 0; k < terms; ++k) p.add_term(rng.pick(pool), rng.small_rational());
  return p;
}

/// Random polynomial of mixed degree in [0, max_degree] with fixed parity.
inline Poly random_poly_upto(Rng& rng, const SystemPtr& sys, int max_degree, Parity parity, int terms = 4) {
  Poly p(sys);
  for (int k = 0; k < terms; ++k) p += random_poly(rng, sys, static_cast<int>(rng.uniform(0, max_degree)), parity, 1);
  return p;
}

/// Random field homogeneous in degree k and parity p.
inline VectorField random_field(Rng& rng, const SystemPtr& sys, int k, Parity parity, int terms = 2) {
  VectorField x(sys);
  for (std::size_t mu = 0; mu < sys->size(); ++mu) {
    if (!rng.coin()) continue;
    x[mu] = random_poly(rng, sys, k + sys->weight(mu), parity + sys->parity(mu), terms);
  }
  return x;
}

}  // namespace superfield
