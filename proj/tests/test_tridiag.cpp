#include <gtest/gtest.h>

#include "qaw/qjacobi.hpp"
#include "qaw/tridiag.hpp"

using qaw::make_rational;
using qaw::Rational;

TEST(Tridiag, Sol1AtUnitScalars) {
  qaw::ParamPoint p;
  p.t = 2;
  p.u = 3;
  // a = b = c = 1: alpha + beta q^2 = -q^{3/2 - nu}.
  const auto k = qaw::sol_a_from_b(p);
  EXPECT_EQ(k.alpha + k.beta * p.q() * p.q(), make_rational(-8, 3));
  EXPECT_FALSE(k.gamma_prime.has_value());
}

TEST(Tridiag, DeltaClosedForms) {
  qaw::ParamPoint p;
  p.t = make_rational(3, 2);
  p.u = make_rational(-2, 5);
  p.a = make_rational(1, 3);
  p.b = 4;
  p.c = make_rational(-5, 7);
  const Rational q = p.q();
  const Rational s = q + 1 / q;
  const Rational q2n1 = q * p.u * p.u;
  EXPECT_EQ(qaw::sol_a_from_b(p).delta, (q2n1 * p.a + 1 / (q2n1 * p.a) + p.b * p.c + 1 / (p.b * p.c)) / s);
  EXPECT_EQ(qaw::sol_b_from_a(p).delta, (q2n1 * p.b + 1 / (q2n1 * p.b) + p.a * p.c + 1 / (p.a * p.c)) / s);
}

TEST(Tridiag, IdentitiesHoldAtSampledPoints) {
  for (std::int64_t seed = 1; seed <= 3; ++seed) {
    const auto p = qaw::sample_point(seed, qaw::Profile::equitable);
    EXPECT_TRUE(qaw::tridiag_a_from_b(p).passed());
    EXPECT_TRUE(qaw::tridiag_b_from_a(p).passed());
    EXPECT_TRUE(qaw::tridiag_round_trip(p).passed());
    for (const auto& r : qaw::reduction_tables(p)) EXPECT_TRUE(r.passed()) << r.check_name << ": " << r.residual_summary;
  }
}

TEST(Tridiag, PerturbedCoefficientFails) {
  const auto p = qaw::sample_point(5, qaw::Profile::equitable);
  auto k = qaw::sol_a_from_b(p);
  k.delta += make_rational(1, 1000);
  const auto r = qaw::tridiag_a_from_b(p, k);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.residual_summary.empty());
}

TEST(Tridiag, ConstraintPointForcesA) {
  for (std::int64_t seed = 1; seed <= 3; ++seed) {
    const auto p = qaw::constrained_little_point(qaw::sample_point(seed, qaw::Profile::little));
    const auto tg = qaw::g_coeffs(p);
    EXPECT_TRUE(qaw::satisfies_constraint(tg, p));
    EXPECT_EQ(qaw::little_dictionary(p).a, p.q() * p.q());
    EXPECT_TRUE(qaw::big_from_little(p, tg).passed());
    EXPECT_TRUE(qaw::alpha_term_breaks(p, tg).passed());
  }
}

TEST(Tridiag, GenericLittlePointViolatesConstraint) {
  const auto p = qaw::sample_point(1, qaw::Profile::little);
  ASSERT_NE(p.jacobi_a, p.q() * p.q());
  EXPECT_FALSE(qaw::satisfies_constraint(qaw::g_coeffs(p), p));
  EXPECT_FALSE(qaw::big_from_little(p, qaw::g_coeffs(p)).passed());
}

TEST(Tridiag, DerivedG1Coefficient) {
  qaw::ParamPoint p;
  p.t = 2;
  p.u = 3;
  qaw::GCoefficients tg{};
  tg.g2 = 5;
  tg.g3 = -p.qpow(4, 2) * 5;
  tg.g4 = 7;
  tg.g5 = make_rational(1, 2);
  tg.g6 = -1;
  const Rational beta = make_rational(2, 3), gamma = make_rational(-1, 4), delta = 9;
  const Rational q = p.q();
  const auto g = qaw::big_table_from_little(tg, beta, gamma, delta, p);
  EXPECT_EQ(g.g1, -beta * q * q * (q - 1 / q) * p.qpow(-2, 1) * tg.g2);
  const auto k = qaw::sol_big_from_little(g, tg, p);
  EXPECT_EQ(k.alpha, 0);
  EXPECT_EQ(k.beta, beta);
  EXPECT_EQ(k.gamma, gamma);
  EXPECT_EQ(k.delta, delta);
  ASSERT_TRUE(k.gamma_prime.has_value());
}

TEST(Tridiag, DegenerateDenominatorThrows) {
  qaw::ParamPoint p;
  p.t = 2;
  p.u = 3;
  qaw::GCoefficients tg{};
  tg.g2 = 1;
  tg.g5 = 1;
  tg.g4 = p.qpow(12, 4);  // q^{-2nu-3} tg4 = q^{2nu+3} tg5
  EXPECT_THROW(qaw::sol_big_from_little(tg, tg, p), qaw::DegenerateError);
}
