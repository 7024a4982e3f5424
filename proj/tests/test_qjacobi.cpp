#include <gtest/gtest.h>

#include "qaw/qjacobi.hpp"

using qaw::LaurentPoly;
using qaw::make_rational;
using qaw::Rational;

namespace {

void expect_all_pass(const qaw::Reports& reports) {
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.check_name << ": " << r.residual_summary;
}

}  // namespace

TEST(Little, DegreeOneClosedForm) {
  qaw::ParamPoint p;
  p.t = make_rational(1, 2);
  const qaw::LittleParams lp{make_rational(1, 3), make_rational(1, 5)};
  const Rational q = p.q();
  const auto f = qaw::little_poly(1, lp, p);
  LaurentPoly expected = LaurentPoly::constant(1);
  expected.add_term(1, -(1 - lp.a * lp.b * q * q * q * q) / (1 - lp.a * q * q));
  EXPECT_EQ(f, expected);
  EXPECT_EQ(qaw::little_poly(0, lp, p), LaurentPoly::constant(1));
}

TEST(Little, DegreeTwoByHand) {
  qaw::ParamPoint p;
  p.t = 2;
  const qaw::LittleParams lp{make_rational(1, 2), make_rational(3, 1)};
  const Rational q2 = p.q() * p.q();
  // 2phi1(q^-4, q^6 ab; q^2 a; q^2; q^2 z) written out.
  Rational c1 = (1 - 1 / (q2 * q2)) * (1 - lp.a * lp.b * q2 * q2 * q2) / ((1 - q2 * lp.a) * (1 - q2)) * q2;
  Rational c2 = (1 - 1 / (q2 * q2)) * (1 - 1 / q2) * (1 - lp.a * lp.b * q2 * q2 * q2) *
                (1 - lp.a * lp.b * q2 * q2 * q2 * q2) /
                ((1 - q2 * lp.a) * (1 - q2 * q2 * lp.a) * (1 - q2) * (1 - q2 * q2)) * q2 * q2;
  LaurentPoly expected = LaurentPoly::constant(1);
  expected.add_term(1, c1);
  expected.add_term(2, c2);
  EXPECT_EQ(qaw::little_poly(2, lp, p), expected);
}

TEST(Little, DegeneratePochhammerThrows) {
  qaw::ParamPoint p;
  p.t = 2;
  const Rational q2 = p.q() * p.q();
  const qaw::LittleParams lp{1 / (q2 * q2), 3};  // (q^2 a; q^2)_2 = 0
  EXPECT_THROW(qaw::little_poly(3, lp, p), qaw::DegenerateError);
}

TEST(Little, DictionaryRoundTrip) {
  for (std::int64_t seed = 1; seed <= 4; ++seed) {
    const auto p = qaw::sample_point(seed, qaw::Profile::little);
    const auto lp = qaw::little_dictionary(p);
    EXPECT_EQ(lp.a, p.jacobi_a);
    EXPECT_EQ(lp.b, p.jacobi_b);
    EXPECT_EQ(qaw::kappa(p), p.q() * p.q() * lp.b);
  }
}

TEST(Little, DictionaryRejectsGeneralPoint) {
  EXPECT_THROW(qaw::little_dictionary(qaw::sample_point(1, qaw::Profile::general)), qaw::IncompatiblePoint);
}

TEST(Little, VerifySuite) {
  for (std::int64_t seed = 1; seed <= 2; ++seed) expect_all_pass(qaw::verify_little(qaw::sample_point(seed, qaw::Profile::little), 6));
}

TEST(Big, DictionaryRoundTrip) {
  for (std::int64_t seed = 1; seed <= 4; ++seed) {
    const auto p = qaw::sample_point(seed, qaw::Profile::big);
    const auto bp = qaw::big_dictionary(p, true);
    EXPECT_EQ(bp, (qaw::BigParams{p.jacobi_a, p.jacobi_b, p.jacobi_c}));
  }
}

TEST(Big, UnscaledDictionaryUsesSmallerRoot) {
  qaw::ParamPoint base;
  base.t = 2;
  base.u = 3;
  base.w.cbar0 = 1;
  base.w.eps1 = 1;
  const auto p = qaw::with_big_parameters(base, make_rational(1, 3), 2, make_rational(5, 2), false);
  const auto bp = qaw::big_dictionary(p, false);
  EXPECT_EQ(bp.a, make_rational(1, 3));
  EXPECT_EQ(bp.c, make_rational(5, 2));
  EXPECT_EQ(bp.b, 2);
}

TEST(Big, DegreeZeroIsOne) {
  const auto p = qaw::sample_point(3, qaw::Profile::big);
  const qaw::BigParams bp{p.jacobi_a, p.jacobi_b, p.jacobi_c};
  EXPECT_EQ(qaw::big_poly_rescaled(0, bp, p), LaurentPoly::constant(1));
}

TEST(Big, RescaledNeedsMatchingKappa) {
  const auto p = qaw::sample_point(3, qaw::Profile::big);
  const qaw::BigParams bp{p.jacobi_a, p.jacobi_b + 1, p.jacobi_c};
  EXPECT_THROW(qaw::big_poly_rescaled(2, bp, p), qaw::IncompatiblePoint);
}

TEST(Big, VerifySuite) {
  for (std::int64_t seed = 1; seed <= 2; ++seed) expect_all_pass(qaw::verify_big(qaw::sample_point(seed, qaw::Profile::big), 6));
}

TEST(QDiff, EigenvalueVanishesAtZero) {
  EXPECT_EQ(qaw::qdiff_eigenvalue(0, make_rational(3, 7), make_rational(1, 2)), 0);
}

TEST(QDiff, WrongEigenvalueIsDetected) {
  const auto p = qaw::sample_point(1, qaw::Profile::little);
  const qaw::LittleParams lp{p.jacobi_a, p.jacobi_b};
  const Rational q = p.q();
  const auto f = qaw::little_poly(3, lp, p);
  const auto residual = qaw::apply(qaw::qdiff_little(lp, q), f) - f * qaw::qdiff_eigenvalue(2, lp.a * lp.b, q);
  EXPECT_FALSE(residual.is_zero());
}
