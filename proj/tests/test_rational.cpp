#include <gtest/gtest.h>

#include "qaw/rational.hpp"

using qaw::make_rational;
using qaw::Rational;

TEST(Rational, MakeNormalizes) {
  EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
  EXPECT_EQ(qaw::to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(qaw::to_string(make_rational(4, 2)), "2");
}

TEST(Rational, PowNegativeExponent) {
  EXPECT_EQ(qaw::pow(make_rational(2, 3), -3), make_rational(27, 8));
  EXPECT_EQ(qaw::pow(make_rational(-1, 2), 0), 1);
  EXPECT_THROW(qaw::pow(Rational(0), -1), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(qaw::parse_rational("3/9"), make_rational(1, 3));
  EXPECT_EQ(qaw::parse_rational(" -7 "), -7);
  EXPECT_EQ(qaw::parse_rational("−2/5"), make_rational(-2, 5));
  EXPECT_THROW(qaw::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(qaw::parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(qaw::parse_rational(""), std::invalid_argument);
  EXPECT_THROW(qaw::parse_rational("1/2/3"), std::invalid_argument);
}

TEST(Rational, RoundTripsThroughString) {
  for (long n = -20; n <= 20; ++n)
    for (long d = 1; d <= 9; ++d) {
      const Rational x = make_rational(n, d);
      EXPECT_EQ(qaw::parse_rational(qaw::to_string(x)), x);
    }
}

TEST(Rational, FieldAxioms) {
  const Rational xs[] = {make_rational(3, 7), make_rational(-5, 2), make_rational(11, 13)};
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs) {
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(Rational(a * (1 / a)), 1);
      }
}

TEST(Rational, Sqrt) {
  EXPECT_EQ(qaw::rational_sqrt(make_rational(49, 4)), make_rational(7, 2));
  EXPECT_EQ(qaw::rational_sqrt(Rational(0)), 0);
  EXPECT_FALSE(qaw::rational_sqrt(make_rational(2, 1)).has_value());
  EXPECT_FALSE(qaw::rational_sqrt(make_rational(-4, 1)).has_value());
}
