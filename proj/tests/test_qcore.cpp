#include <gtest/gtest.h>

#include "qaw/qcore.hpp"

using qaw::make_rational;
using qaw::Rational;

TEST(QPoch, KnownValue) { EXPECT_EQ(qaw::qpoch(make_rational(1, 2), make_rational(1, 3), 2), make_rational(5, 12)); }

TEST(QPoch, EmptyProductAndRecurrence) {
  const Rational a = make_rational(-3, 5), qq = make_rational(2, 7);
  EXPECT_EQ(qaw::qpoch(a, qq, 0), 1);
  for (int n = 0; n < 8; ++n)
    EXPECT_EQ(qaw::qpoch(a, qq, n + 1), qaw::qpoch(a, qq, n) * (1 - a * qaw::pow(qq, n)));
}

TEST(QPoch, TerminatesAtNegativePower) {
  const Rational qq = make_rational(1, 4);
  EXPECT_EQ(qaw::qpoch(qaw::pow(qq, -3), qq, 4), 0);
  EXPECT_NE(qaw::qpoch(qaw::pow(qq, -3), qq, 3), 0);
}

TEST(ParamPoint, HalfPowers) {
  qaw::ParamPoint p;
  p.t = make_rational(2, 3);
  p.u = make_rational(5, 2);
  EXPECT_EQ(p.q(), make_rational(4, 9));
  EXPECT_EQ(p.qpow(3, 1), make_rational(8, 27) * make_rational(5, 2));
  EXPECT_EQ(p.qpow(-2, -2), make_rational(9, 4) * make_rational(4, 25));
}

TEST(Profile, NamesRoundTrip) {
  for (auto pr : {qaw::Profile::general, qaw::Profile::little, qaw::Profile::big, qaw::Profile::equitable})
    EXPECT_EQ(qaw::parse_profile(qaw::to_string(pr)), pr);
  EXPECT_THROW(qaw::parse_profile("medium"), std::invalid_argument);
}

TEST(Degeneracy, RejectsUnitT) {
  qaw::ParamPoint p;
  p.t = 1;
  EXPECT_FALSE(qaw::screen_degeneracies(p, 10));
  p.t = -1;
  EXPECT_FALSE(qaw::screen_degeneracies(p, 10));
}

TEST(Degeneracy, RejectsResonantNu) {
  qaw::ParamPoint p;
  p.t = 2;
  p.u = 2;  // u^2 = q
  EXPECT_FALSE(qaw::screen_degeneracies(p, 10));
  p.u = 3;
  EXPECT_TRUE(qaw::screen_degeneracies(p, 10));
}

TEST(Degeneracy, RejectsZeroEquitableScalar) {
  qaw::ParamPoint p;
  p.b = 0;
  EXPECT_FALSE(qaw::screen_degeneracies(p, 10));
}

TEST(Sampling, Deterministic) {
  for (auto pr : {qaw::Profile::general, qaw::Profile::little, qaw::Profile::big, qaw::Profile::equitable}) {
    const auto p1 = qaw::sample_point(7, pr);
    const auto p2 = qaw::sample_point(7, pr);
    EXPECT_EQ(qaw::serialize(p1), qaw::serialize(p2));
    EXPECT_EQ(qaw::digest(p1), qaw::digest(p2));
    EXPECT_EQ(qaw::digest(p1).size(), 16u);
    EXPECT_TRUE(qaw::screen_degeneracies(p1, 10));
  }
  EXPECT_NE(qaw::digest(qaw::sample_point(1, qaw::Profile::general)),
            qaw::digest(qaw::sample_point(2, qaw::Profile::general)));
}

TEST(Sampling, LittleProfileZeros) {
  for (std::int64_t seed = 1; seed <= 5; ++seed) {
    const auto p = qaw::sample_point(seed, qaw::Profile::little);
    EXPECT_EQ(p.w.c0, 0);
    EXPECT_EQ(p.w.cbar1, 0);
    EXPECT_EQ(p.w.mu0, 0);
    EXPECT_NE(p.w.c1, 0);
  }
}

TEST(Sampling, BigProfileZeros) {
  const auto p = qaw::sample_point(4, qaw::Profile::big);
  EXPECT_EQ(p.w.c0, 0);
  EXPECT_EQ(p.w.mu0, 0);
  EXPECT_NE(p.w.cbar1, 0);
}

TEST(Forward, BigRejectsOppositeAC) {
  qaw::ParamPoint p;
  p.w.cbar0 = 1;
  p.w.eps1 = 1;
  EXPECT_THROW(qaw::with_big_parameters(p, 2, 3, -2), qaw::DegenerateError);
}
