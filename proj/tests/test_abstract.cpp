#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "superfield/abstract.hpp"

using namespace superfield;

namespace {

bool jacobi_holds(const AbstractAlgebra& alg, const AbstractElement& x, const AbstractElement& y,
                  const AbstractElement& z, bool xy_odd) {
  auto lhs = alg.bracket(x, alg.bracket(y, z));
  auto rhs = alg.bracket(alg.bracket(x, y), z) + alg.bracket(y, alg.bracket(x, z)) * Rational(xy_odd ? -1 : 1);
  return lhs == rhs;
}

bool both_odd(AbstractKind a, AbstractKind b) {
  return kind_parity(a) == Parity::Odd && kind_parity(b) == Parity::Odd;
}

/// Kind triples (as "LGS" etc.) on which Jacobi fails for some sample.
std::set<std::string> jacobi_failures(const AbstractAlgebra& alg, std::uint64_t seed, int samples) {
  Rng rng(seed);
  std::set<std::string> out;
  for (auto a : alg.kinds())
    for (auto b : alg.kinds())
      for (auto c : alg.kinds())
        for (int n = 0; n < samples; ++n) {
          auto x = alg.random(rng, a, 2);
          auto y = alg.random(rng, b, 2);
          auto z = alg.random(rng, c, 2);
          if (!jacobi_holds(alg, x, y, z, both_odd(a, b)))
            out.insert(std::string(kind_name(a)) + kind_name(b) + kind_name(c));
        }
  return out;
}

class Abstract : public ::testing::TestWithParam<std::string> {};

TEST_P(Abstract, GradedAntisymmetry) {
  AbstractAlgebra alg(GetParam());
  Rng rng(41);
  for (auto a : alg.kinds())
    for (auto b : alg.kinds())
      for (int n = 0; n < 3; ++n) {
        auto x = alg.random(rng, a, 2);
        auto y = alg.random(rng, b, 2);
        EXPECT_EQ(alg.bracket(x, y), alg.bracket(y, x) * Rational(both_odd(a, b) ? 1 : -1)) << kind_name(a) << kind_name(b);
      }
}

INSTANTIATE_TEST_SUITE_P(All, Abstract, ::testing::Values("ksle510", "vle36", "mb38"));

class AbstractConsistent : public ::testing::TestWithParam<std::string> {};

TEST_P(AbstractConsistent, Jacobi) {
  AbstractAlgebra alg(GetParam());
  EXPECT_TRUE(jacobi_failures(alg, 42, 2).empty());
}

TEST_P(AbstractConsistent, BracketsRespectConstraints) {
  AbstractAlgebra alg(GetParam());
  Rng rng(43);
  for (auto a : alg.kinds())
    for (auto b : alg.kinds())
      for (int n = 0; n < 3; ++n) {
        auto x = alg.random(rng, a, 2);
        auto y = alg.random(rng, b, 2);
        ASSERT_TRUE(alg.satisfies_constraints(x));
        EXPECT_TRUE(alg.satisfies_constraints(alg.bracket(x, y))) << kind_name(a) << kind_name(b);
      }
}

INSTANTIATE_TEST_SUITE_P(All, AbstractConsistent, ::testing::Values("ksle510", "vle36"));

TEST(Abstract, UnknownPresetThrows) { EXPECT_THROW(AbstractAlgebra("kas16"), Error); }

TEST(Abstract, KsleGGOnConstantForms) {
  AbstractAlgebra alg("ksle510");
  // omega = du1 ^ du2, upsilon = du3 ^ du4 as antisymmetric components.
  auto om = alg.zeros(AbstractKind::G), up = alg.zeros(AbstractKind::G);
  om[5 * 0 + 1] = Poly::constant(alg.system(), 1);
  om[5 * 1 + 0] = Poly::constant(alg.system(), -1);
  up[5 * 2 + 3] = Poly::constant(alg.system(), 1);
  up[5 * 3 + 2] = Poly::constant(alg.system(), -1);
  auto r = alg.bracket(alg.make(AbstractKind::G, om), alg.make(AbstractKind::G, up));
  // eps^{ijkl5} om_{ij} up_{kl}: (12|34), (21|34), (12|43), (21|43), each +1.
  auto want = alg.zeros(AbstractKind::L);
  want[4] = Poly::constant(alg.system(), 4);
  EXPECT_EQ(r, alg.make(AbstractKind::L, want));
}

TEST(Abstract, VleJJIsMatrixCommutator) {
  AbstractAlgebra alg("vle36");
  auto c = [&](int v) { return Poly::constant(alg.system(), v); };
  std::vector<Poly> x{c(1), c(2), c(0), c(-1)}, y{c(0), c(1), c(3), c(0)};
  auto r = alg.bracket(alg.make(AbstractKind::J, x), alg.make(AbstractKind::J, y));
  // (YX - XY)^a_b, the printed data of J_{[X,Y]}
  std::vector<Poly> want(4, alg.zero());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) want[2 * a + b] += y[2 * a + k] * x[2 * k + b] - x[2 * a + k] * y[2 * k + b];
  EXPECT_EQ(r, alg.make(AbstractKind::J, want));
}

TEST(Abstract, PrintedVleTableViolatesJacobi) {
  AbstractAlgebra printed("vle36", AbstractConventions{});
  auto bad = jacobi_failures(printed, 42, 2);
  EXPECT_FALSE(bad.empty());
  // Only triples with at least two odd entries are affected.
  for (const auto& t : bad) EXPECT_GE(std::count(t.begin(), t.end(), 'G'), 2) << t;
}

TEST(Abstract, MbGGVanishes) {
  AbstractAlgebra alg("mb38");
  Rng rng(44);
  for (int n = 0; n < 10; ++n)
    EXPECT_TRUE(alg.bracket(alg.random(rng, AbstractKind::G, 3), alg.random(rng, AbstractKind::G, 3)).is_zero());
}

TEST(Abstract, MbJacobiWithoutS) {
  AbstractAlgebra alg("mb38");
  for (const auto& t : jacobi_failures(alg, 45, 2)) EXPECT_NE(t.find('S'), std::string::npos) << t;
}

TEST(Abstract, MbPrintedTableViolatesJacobiWithS) {
  AbstractAlgebra alg("mb38");
  auto bad = jacobi_failures(alg, 42, 2);
  EXPECT_TRUE(bad.count("GGS"));
  EXPECT_TRUE(bad.count("LSS"));
}

}  // namespace
