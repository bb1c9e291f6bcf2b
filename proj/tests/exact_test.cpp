#include <gtest/gtest.h>

#include "sg3/exact.hpp"

namespace sg3 {
namespace {

TEST(Fraction, RoundTripsThroughString) {
  const Rational q(-193, 1176);
  EXPECT_EQ(fraction_string(q), "-193/1176");
  EXPECT_EQ(parse_fraction("-193/1176"), q);
  EXPECT_EQ(fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(parse_fraction("7"), Rational(7));
  EXPECT_EQ(parse_fraction("4/6"), Rational(2, 3));
}

TEST(Decimal, ParsesToExactRational) {
  EXPECT_EQ(parse_decimal("0.02443"), Rational(2443, 100000));
  EXPECT_EQ(parse_decimal("-1.5"), Rational(-3, 2));
  EXPECT_EQ(parse_decimal("36"), Rational(36));
}

TEST(Decimal, RoundsHalfAwayFromZero) {
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.13");
  EXPECT_EQ(to_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.66667");
  EXPECT_EQ(to_decimal(Rational(11, 75)), "0.14667");
  EXPECT_EQ(to_decimal(Rational(36)), "36.00000");
  EXPECT_EQ(to_decimal(Rational(-1, 300000)), "0.00000");  // no negative zero
}

TEST(Surd, ComparesExactly) {
  const Surd root2 = Surd::sqrt_of(Rational(2));
  EXPECT_EQ(root2.compare(Rational(7, 5)), 1);
  EXPECT_EQ(root2.compare(Rational(3, 2)), -1);
  EXPECT_EQ(Surd::sqrt_of(Rational(9, 4)).compare(Rational(3, 2)), 0);
  const Surd s{Rational(3), -1, Rational(2)};  // 3 - sqrt 2
  EXPECT_EQ(s.compare(Rational(1585, 1000)), 1);
  EXPECT_EQ(s.compare(Rational(1586, 1000)), -1);
}

TEST(Surd, RoundsForDisplay) {
  EXPECT_EQ(Surd::sqrt_of(Rational(2)).to_decimal(), "1.41421");
  EXPECT_EQ((Surd{Rational(3), -1, Rational(2)}).to_decimal(), "1.58579");
  EXPECT_EQ(Surd::sqrt_of(Rational(4, 3)).to_decimal(), "1.15470");
  EXPECT_NEAR(Surd::sqrt_of(Rational(2)).approx(), 1.41421356, 1e-8);
}

TEST(BigInt, WideConversionAndHelpers) {
  const unsigned __int128 big = (static_cast<unsigned __int128>(1) << 100) + 7;
  BigInt expected = pow(BigInt(2), 100) + 7;
  EXPECT_EQ(to_big(big), expected);
  EXPECT_EQ(to_big(static_cast<unsigned __int128>(42)), BigInt(42));
  EXPECT_EQ(factorial(6), BigInt(720));
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(floor_of(Rational(17, 5)), BigInt(3));
}

}  // namespace
}  // namespace sg3
