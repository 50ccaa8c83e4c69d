// Ring, vector-field, form and linear-algebra tests on small hand systems.

#include <gtest/gtest.h>

#include "superfield/epsilon.hpp"
#include "superfield/forms.hpp"
#include "superfield/linalg.hpp"
#include "superfield/random.hpp"

using namespace superfield;

namespace {

SystemPtr contact2() {
  return CoordinateSystem::make({{"t", Parity::Even, 2}, {"th1", Parity::Odd, 1}, {"th2", Parity::Odd, 1}});
}

SystemPtr mb_like() {
  std::vector<Coordinate> c;
  for (int i = 1; i <= 3; ++i) c.push_back({"u" + std::to_string(i), Parity::Even, 2});
  for (int i = 1; i <= 3; ++i)
    for (int a = 1; a <= 2; ++a) c.push_back({"th" + std::to_string(i) + std::to_string(a), Parity::Odd, 1});
  c.push_back({"vth1", Parity::Odd, 3});
  c.push_back({"vth2", Parity::Odd, 3});
  return CoordinateSystem::make(c);
}

Poly X(const SystemPtr& s, const std::string& n) { return Poly::coordinate(s, n); }

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Epsilon, Symbols) {
  EXPECT_EQ(eps3(0, 1, 2), 1);
  EXPECT_EQ(eps3(1, 0, 2), -1);
  EXPECT_EQ(eps3(0, 0, 2), 0);
  EXPECT_EQ(eps5(1, 0, 2, 3, 4), -1);
  EXPECT_EQ(eps5(4, 0, 1, 2, 3), 1);
  EXPECT_EQ(eps2_up(0, 1), 1);
  EXPECT_EQ(eps2_down(1, 0), 1);
  EXPECT_EQ(eps2_down(0, 1), -1);
}

TEST(Poly, OddProducts) {
  auto s = contact2();
  auto t1 = X(s, "th1");
  auto t2 = X(s, "th2");
  EXPECT_EQ(to_string(t1 * t2), "th1*th2");
  EXPECT_EQ(t2 * t1, -(t1 * t2));
  EXPECT_TRUE((t1 * t1).is_zero());
}

TEST(Poly, MismatchedSystemsThrow) {
  auto a = contact2();
  auto b = mb_like();
  EXPECT_THROW(X(a, "t") * X(b, "u1"), Error);
}

TEST(Poly, LeftDerivative) {
  auto s = contact2();
  EXPECT_EQ(derive(X(s, "th2"), "th2"), Poly::constant(s, 1));
  EXPECT_TRUE(derive(X(s, "th2"), "th1").is_zero());
  EXPECT_EQ(derive(X(s, "t"), "t"), Poly::constant(s, 1));
  // d/dth2 (th1 th2) = -th1
  EXPECT_EQ(derive(X(s, "th1") * X(s, "th2"), "th2"), -X(s, "th1"));
  EXPECT_THROW(derive(X(s, "t"), "nope"), Error);

  std::vector<Coordinate> c;
  for (const char* n : {"th12", "th34"}) c.push_back({n, Parity::Odd, 1});
  auto k = CoordinateSystem::make(c);
  EXPECT_EQ(derive(X(k, "th12") * X(k, "th34"), "th12"), X(k, "th34"));
}

TEST(Poly, ParityAndDegree) {
  auto m = mb_like();
  auto g = parity_and_degree(X(m, "u1"));
  EXPECT_EQ(g.parity(), Parity::Even);
  EXPECT_EQ(g.degree(), 2);
  g = parity_and_degree(X(m, "vth1"));
  EXPECT_EQ(g.parity(), Parity::Odd);
  EXPECT_EQ(g.degree(), 3);

  auto s = contact2();
  g = parity_and_degree(X(s, "t") + X(s, "th1"));
  EXPECT_FALSE(g.parity());
  EXPECT_FALSE(g.degree());
  EXPECT_EQ(g.degrees, (std::set<int>{1, 2}));
  EXPECT_EQ(g.parities.size(), 2U);
}

TEST(Poly, MonomialCount) {
  auto s = contact2();
  // degree 3: t*th1, t*th2
  EXPECT_EQ(monomials_of_degree(*s, 3).size(), 2U);
  // degree 4: t^2, t*th1*th2
  EXPECT_EQ(monomials_of_degree(*s, 4).size(), 2U);
}

TEST(Poly, RandomRingAxioms) {
  auto s = mb_like();
  Rng rng(7);
  for (int n = 0; n < 100; ++n) {
    Parity pp = parity_of(static_cast<int>(rng.uniform(0, 1)));
    Parity pq = parity_of(static_cast<int>(rng.uniform(0, 1)));
    auto p = random_poly(rng, s, static_cast<int>(rng.uniform(0, 4)), pp);
    auto q = random_poly(rng, s, static_cast<int>(rng.uniform(0, 4)), pq);
    auto r = random_poly(rng, s, static_cast<int>(rng.uniform(0, 3)), Parity::Odd);
    int sg = (bit(pp) & bit(pq)) != 0 ? -1 : 1;
    EXPECT_TRUE((p * q - Rational(sg) * (q * p)).is_zero());
    EXPECT_EQ((p * q) * r, p * (q * r));
    std::size_t x = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(s->size()) - 1));
    int lx = (bit(s->parity(x)) & bit(pp)) != 0 ? -1 : 1;
    EXPECT_EQ(derive(p * q, x), derive(p, x) * q + Rational(lx) * (p * derive(q, x)));
    if (s->parity(x) == Parity::Odd) EXPECT_TRUE(derive(derive(p, x), x).is_zero());
  }
}

TEST(VectorField, GradeDecompose) {
  std::vector<Coordinate> c{{"u1", Parity::Even, 2}};
  auto s = CoordinateSystem::make(c);
  VectorField x = VectorField::partial(s, 0) + X(s, "u1") * VectorField::partial(s, 0);
  auto parts = vf_grade_decompose(x);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_TRUE(parts.count(-2) && parts.count(0));
  auto z = grading_operator(s);
  for (const auto& [k, v] : parts) EXPECT_EQ(vf_bracket(z, v), Rational(k) * v);
}

TEST(VectorField, OddBracketIsAnticommutator) {
  auto s = contact2();
  auto d1 = VectorField::partial(s, "th1") - X(s, "th1") * VectorField::partial(s, "t");
  // {d1, d1} = 2 d1(d1) componentwise = -2 d/dt
  EXPECT_EQ(vf_bracket(d1, d1), Rational(-2) * VectorField::partial(s, "t"));
}

TEST(VectorField, DivergenceSigns) {
  auto s = mb_like();
  EXPECT_TRUE(vf_divergence(VectorField::partial(s, "u2")).is_zero());
  // Euler field on evens minus odds: 3 - 8 for u d_u + th d_th + vth d_vth
  VectorField e(s);
  for (std::size_t mu = 0; mu < s->size(); ++mu) e[mu] = Poly::coordinate(s, mu);
  EXPECT_EQ(vf_divergence(e), Poly::constant(s, -5));
}

TEST(VectorField, RandomJacobiAndDerivation) {
  auto s = mb_like();
  Rng rng(11);
  for (int n = 0; n < 20; ++n) {
    Parity p[3];
    VectorField v[3];
    for (int k = 0; k < 3; ++k) {
      p[k] = parity_of(static_cast<int>(rng.uniform(0, 1)));
      v[k] = random_field(rng, s, static_cast<int>(rng.uniform(-1, 1)) * 2 + bit(p[k]), p[k]);
    }
    auto sg = [&](int a, int b) { return Rational((bit(p[a]) & bit(p[b])) != 0 ? -1 : 1); };
    VectorField jac = sg(0, 2) * vf_bracket(v[0], vf_bracket(v[1], v[2])) +
                      sg(1, 0) * vf_bracket(v[1], vf_bracket(v[2], v[0])) +
                      sg(2, 1) * vf_bracket(v[2], vf_bracket(v[0], v[1]));
    EXPECT_TRUE(jac.is_zero());
    EXPECT_TRUE((vf_bracket(v[0], v[1]) + sg(0, 1) * vf_bracket(v[1], v[0])).is_zero());
    auto f = random_poly(rng, s, 2, Parity::Odd);
    auto g = random_poly(rng, s, 3, Parity::Even);
    // f is odd, so moving X past it costs (-)^X.
    Rational sx = p[0] == Parity::Odd ? -1 : 1;
    EXPECT_EQ(vf_apply(v[0], f * g), vf_apply(v[0], f) * g + sx * (f * vf_apply(v[0], g)));
  }
}

TEST(VectorField, DivergenceBeta) {
  std::vector<Coordinate> c{{"tau", Parity::Odd, 2}, {"u1", Parity::Even, 1}, {"th1", Parity::Odd, 1}};
  auto s = CoordinateSystem::make(c);
  // f = tau: 2(-1)(0 + (0 - beta)) = 2 beta
  auto r = vf_divergence_beta(X(s, "tau"), "tau", {"u1"}, {"th1"}, make_rational(1, 3));
  EXPECT_EQ(r, Poly::constant(s, make_rational(2, 3)));
  // f = u1 th1 is odd: -2 * d^2/du dth = -2
  EXPECT_EQ(vf_divergence_beta(X(s, "u1") * X(s, "th1"), "tau", {"u1"}, {"th1"}, 0), Poly::constant(s, -2));
  auto plain = contact2();
  EXPECT_THROW(vf_divergence_beta(X(plain, "t"), "tau", {}, {}, 0), Error);
}

TEST(Forms, Products) {
  auto s = mb_like();
  auto du = DiffForm::dx(s, "u1");
  EXPECT_TRUE((du * du).is_zero());
  auto da = DiffForm::dx(s, "th11");
  auto db = DiffForm::dx(s, "th21");
  EXPECT_EQ(da * db, db * da);
  EXPECT_FALSE((da * da).is_zero());
  EXPECT_EQ(form_degree(da * db * du), 3);
}

TEST(Forms, ContactPairingAndLie) {
  auto s = contact2();
  auto alpha = DiffForm::dx(s, "t") + X(s, "th1") * DiffForm::dx(s, "th1") + X(s, "th2") * DiffForm::dx(s, "th2");
  EXPECT_EQ(pairing(VectorField::partial(s, "t"), alpha), Poly::constant(s, 1));
  // Z = 2t d_t + th d_th scales alpha by 2
  VectorField z = grading_operator(s);
  for (auto conv : {LieConvention::Paper, LieConvention::CommutesWithD})
    EXPECT_EQ(form_lie_derivative(z, alpha, conv), Rational(2) * alpha);
  // theta_1 d_t fails
  auto bad = X(s, "th1") * VectorField::partial(s, "t");
  auto cert = pfaff_check(bad, {{"alpha", alpha, s->index("t")}});
  EXPECT_FALSE(cert.ok());
}

TEST(Forms, LieDerivativeIsHomomorphism) {
  auto s = mb_like();
  Rng rng(5);
  DiffForm w = X(s, "th11") * DiffForm::dx(s, "u1") + X(s, "u2") * DiffForm::dx(s, "th21") * DiffForm::dx(s, "vth1") +
               DiffForm::dx(s, "th32");
  for (auto conv : {LieConvention::Paper, LieConvention::CommutesWithD}) {
    for (int n = 0; n < 20; ++n) {
      Parity px = parity_of(static_cast<int>(rng.uniform(0, 1)));
      Parity py = parity_of(static_cast<int>(rng.uniform(0, 1)));
      auto x = random_field(rng, s, bit(px) + 2 * static_cast<int>(rng.uniform(-1, 0)), px);
      auto y = random_field(rng, s, bit(py), py);
      Rational sg = (bit(px) & bit(py)) != 0 ? -1 : 1;
      auto lhs = form_lie_derivative(vf_bracket(x, y), w, conv);
      auto rhs = form_lie_derivative(x, form_lie_derivative(y, w, conv), conv) -
                 sg * form_lie_derivative(y, form_lie_derivative(x, w, conv), conv);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(LinAlg, NullspaceAndSpan) {
  RowSpace r;
  r.insert({{0, 1}, {1, 2}, {2, 3}});
  r.insert({{0, 2}, {1, 4}, {2, 7}});
  EXPECT_EQ(r.rank(), 2U);
  EXPECT_FALSE(r.insert({{2, 5}}));
  auto ns = r.nullspace(3);
  ASSERT_EQ(ns.size(), 1U);
  // x + 2y + 3z = 0, z = 0 -> (-2, 1, 0)
  EXPECT_EQ(ns[0], (SparseVec{{0, -2}, {1, 1}}));
  EXPECT_TRUE(r.contains({{0, 3}, {1, 6}, {2, 10}}));
  EXPECT_EQ(span_of({{{0, 1}}, {{1, 1}}}), span_of({{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}}));
}
