#include <gtest/gtest.h>

#include "modhyp/errors.hpp"
#include "modhyp/rational.hpp"

using namespace modhyp;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(-6, -4);
  EXPECT_EQ(r.num(), 3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(4, -8), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(3, 2) * Rational(16, 21), Rational(8, 7));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(Rational(8, 7).reciprocal(), Rational(7, 8));
  EXPECT_THROW(Rational(0).reciprocal(), InvalidArgument);
}

TEST(Rational, OrderingIsExact) {
  EXPECT_LT(Rational(2, 3), Rational(1));
  EXPECT_GT(Rational(8, 7), Rational(1));
  EXPECT_EQ(Rational(5, 5) <=> Rational(1), std::strong_ordering::equal);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  // Cross products of these overflow 128 bits; ordering must still be right.
  const i128 big = (i128{1} << 100) + 1;
  EXPECT_LT(Rational(big - 1, big), Rational(big, big + 1));
  EXPECT_GT(Rational(big, 3), Rational(big - 1, 3));
}

TEST(Rational, OverflowIsReported) {
  const i128 big = (i128{1} << 100) + 1;
  EXPECT_THROW(Rational(big, 1) * Rational(big, 3), ArithmeticOverflow);
}

TEST(Rational, StringsAndDecimals) {
  EXPECT_EQ(Rational(8, 7).to_string(), "8/7");
  EXPECT_EQ(Rational(1).to_string(), "1/1");
  EXPECT_EQ(to_decimal(Rational(8, 7)), "1.142857");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666667");
  EXPECT_EQ(to_decimal(Rational(1)), "1.000000");
  EXPECT_EQ(to_decimal(Rational(-1, 3)), "-0.333333");
  EXPECT_EQ(to_decimal(Rational(1, 2000000)), "0.000001");
  EXPECT_EQ(Rational::parse("8/7"), Rational(8, 7));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
  EXPECT_THROW(Rational::parse("1/0"), InvalidArgument);
  EXPECT_THROW(Rational::parse("x"), InvalidArgument);
  EXPECT_THROW(Rational::parse(""), InvalidArgument);
}
