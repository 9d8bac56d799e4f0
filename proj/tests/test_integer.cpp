#include <gtest/gtest.h>

#include <limits>

#include "propmod/integer.hpp"
#include "propmod/rational.hpp"

using namespace propmod;

TEST(Integer, ModReduceExamples) {
  EXPECT_EQ(mod_reduce(12, 11), 1);
  EXPECT_EQ(mod_reduce(-2, 5), 3);
  EXPECT_EQ(mod_reduce(0, 4), 0);
  EXPECT_THROW(mod_reduce(3, 0), std::invalid_argument);
}

TEST(Integer, ModReduceRange) {
  for (Int a = -60; a <= 60; ++a)
    for (Int b = 1; b <= 13; ++b) {
      Int r = mod_reduce(a, b);
      EXPECT_GE(r, 0);
      EXPECT_LT(r, b);
      EXPECT_EQ((a - r) % b, 0);
    }
}

TEST(Integer, FloorCeilDiv) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(ceil_div(6, 3), 2);
}

TEST(Integer, GcdLcmExt) {
  EXPECT_EQ(gcd(12, -18), 6);
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(lcm(4, 6), 12);
  Int x, y;
  Int g = ext_gcd(240, 46, x, y);
  EXPECT_EQ(g, 2);
  EXPECT_EQ(240 * x + 46 * y, 2);
}

TEST(Integer, OverflowIsReported) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(checked_add(big, 1), OverflowError);
  EXPECT_THROW(checked_mul(big / 2 + 1, 2), OverflowError);
  EXPECT_THROW(checked_sub(-big - 1, 1), OverflowError);
  EXPECT_THROW(narrow(Int(std::numeric_limits<std::int64_t>::max()) + 1), OverflowError);
  EXPECT_EQ(narrow(-5), -5);
}

TEST(Integer, ParseAndPrint) {
  EXPECT_EQ(parse_int("-42"), -42);
  EXPECT_EQ(to_string(parse_int("170141183460469231731687303715884105727")),
            "170141183460469231731687303715884105727");
  EXPECT_THROW(parse_int("4x"), std::invalid_argument);
  EXPECT_THROW(parse_int(""), std::invalid_argument);
}

TEST(Rational, NormalizesAndOrders) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.floor(), -2);
  EXPECT_EQ(r.ceil(), -1);
  EXPECT_EQ(Rational::parse("3/2") + Rational::parse("1/2"), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3).str(), "1/3");
  EXPECT_EQ(Rational(5).str(), "5");
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
}
