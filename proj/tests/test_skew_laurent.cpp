#include <gtest/gtest.h>

#include "qaw/skew_laurent.hpp"

using qaw::LaurentPoly;
using qaw::make_rational;
using qaw::Rational;
using qaw::SkewLaurentOp;

namespace {

const Rational kQ = make_rational(4, 9);

SkewLaurentOp sample_op(int k) {
  SkewLaurentOp op(kQ);
  op.add_term(k, 1, make_rational(k + 2, 3));
  op.add_term(-1, -k, make_rational(-1, k + 4));
  op.add_term(0, 0, make_rational(5, 7));
  return op;
}

}  // namespace

TEST(SkewLaurent, ZTCommutation) {
  const auto z = SkewLaurentOp::z(kQ);
  const auto t = SkewLaurentOp::shift(kQ);
  EXPECT_EQ(t * z, kQ * (z * t));
  const auto zt = z * t;
  EXPECT_EQ(zt * zt, SkewLaurentOp::term(kQ, 2, 2, kQ));
}

TEST(SkewLaurent, QCommutatorOfZAndT) {
  const auto z = SkewLaurentOp::z(kQ);
  const auto t = SkewLaurentOp::shift(kQ);
  EXPECT_EQ(qaw::q_commutator(z, t, kQ), (kQ - 1) * (z * t));
  EXPECT_THROW(qaw::q_commutator(z, t, 0), std::invalid_argument);
}

TEST(SkewLaurent, ApplyShift) {
  const auto op = SkewLaurentOp::term(kQ, 1, 2, 1);
  EXPECT_EQ(qaw::apply(op, LaurentPoly::monomial(3)), LaurentPoly::monomial(4, qaw::pow(kQ, 6)));
}

TEST(SkewLaurent, InversesCancel) {
  EXPECT_EQ(SkewLaurentOp::shift(kQ, 3) * SkewLaurentOp::shift(kQ, -3), SkewLaurentOp::identity(kQ));
  EXPECT_EQ(SkewLaurentOp::z(kQ, -2) * SkewLaurentOp::z(kQ, 2), SkewLaurentOp::identity(kQ));
}

TEST(SkewLaurent, RingAxioms) {
  for (int i = 0; i < 3; ++i) {
    const auto a = sample_op(i), b = sample_op(i + 1), c = sample_op(i + 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_TRUE(qaw::is_zero(a - a));
  }
}

TEST(SkewLaurent, ActionIsCompatibleWithProduct) {
  LaurentPoly f;
  f.add_term(-1, 2);
  f.add_term(0, make_rational(-1, 3));
  f.add_term(3, 5);
  for (int i = 0; i < 3; ++i) {
    const auto a = sample_op(i), b = sample_op(i + 2);
    EXPECT_EQ(qaw::apply(a * b, f), qaw::apply(a, qaw::apply(b, f)));
  }
}

TEST(SkewLaurent, MismatchedRingsThrow) {
  const auto a = SkewLaurentOp::z(kQ);
  const auto b = SkewLaurentOp::z(make_rational(1, 2));
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
  EXPECT_THROW(SkewLaurentOp(Rational(0)), std::invalid_argument);
}

TEST(SkewLaurent, PowerMatchesRepeatedProduct) {
  const auto a = sample_op(1);
  EXPECT_EQ(qaw::power(a, 3), a * a * a);
  EXPECT_EQ(qaw::power(a, 0), SkewLaurentOp::identity(kQ));
}

TEST(LaurentPoly, QPochLinear) {
  const Rational s = make_rational(3, 2);
  const auto f = LaurentPoly::qpoch_linear(s, kQ, 2);
  LaurentPoly expected = LaurentPoly::constant(1);
  expected.add_term(1, -s * (1 + kQ));
  expected.add_term(2, s * s * kQ);
  EXPECT_EQ(f, expected);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_THROW(LaurentPoly().degree(), std::logic_error);
}

TEST(LaurentPoly, Rescaled) {
  LaurentPoly f;
  f.add_term(-1, 1);
  f.add_term(2, 1);
  LaurentPoly g;
  g.add_term(-1, make_rational(1, 3));
  g.add_term(2, 9);
  EXPECT_EQ(f.rescaled(3), g);
}

TEST(LaurentPoly, ZeroCoefficientsDropped) {
  LaurentPoly f;
  f.add_term(1, 2);
  f.add_term(1, -2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f, LaurentPoly());
}
