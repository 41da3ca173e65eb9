#include <gtest/gtest.h>

#include "quorumlab/coalition.hpp"
#include "quorumlab/rational.hpp"

using namespace quorumlab;

TEST(Coalition, MembersAndSize) {
  const auto c = Coalition::of({3, 1, 2});
  EXPECT_EQ(c.size(), 3);
  EXPECT_EQ(c.members(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(c.to_string(), "{1,2,3}");
  EXPECT_TRUE(c.contains(PlayerId(2)));
  EXPECT_FALSE(c.contains(PlayerId(4)));
  EXPECT_EQ(c.low_word(), 0b111u);
}

TEST(Coalition, SetAlgebra) {
  const auto a = Coalition::of({1, 2, 5});
  const auto b = Coalition::of({2, 3});
  EXPECT_EQ(a | b, Coalition::of({1, 2, 3, 5}));
  EXPECT_EQ(a & b, Coalition::of({2}));
  EXPECT_EQ(a - b, Coalition::of({1, 5}));
  EXPECT_TRUE(Coalition::of({2}).subset_of(a));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_EQ(a.without(PlayerId(5)).with(PlayerId(3)), Coalition::of({1, 2, 3}));
}

TEST(Coalition, RangeAndGrand) {
  EXPECT_TRUE(Coalition::range(4, 3).empty());
  EXPECT_EQ(Coalition::grand(4), Coalition::of({1, 2, 3, 4}));
  EXPECT_EQ(Coalition::range(1, 7).count_in(3, 5), 3);
  EXPECT_EQ(Coalition::of({2, 9}).max_player(), 9);
}

TEST(Coalition, WideCoalitionsBeyondOneWord) {
  const auto c = Coalition::range(60, 71);
  EXPECT_EQ(c.size(), 12);
  EXPECT_FALSE(c.fits_word());
  EXPECT_EQ(c.max_player(), 71);
  EXPECT_TRUE(Coalition::of({200}).contains(PlayerId(200)));
  EXPECT_LT(Coalition::of({1, 2, 3}), Coalition::of({65}));
}

TEST(Coalition, RejectsOutOfRangePlayers) {
  EXPECT_THROW(Coalition::of({0}), input_error);
  EXPECT_THROW(Coalition::of({kMaxPlayers + 1}), input_error);
}

TEST(Coalition, OrderIsMaskOrder) {
  EXPECT_LT(Coalition::from_mask(5), Coalition::from_mask(6));
  EXPECT_EQ(Coalition::of({1, 3}), Coalition::from_mask(5));
}

TEST(Rational, CanonicalRendering) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-3", "5/2", "-1/3", "123456789012345678901234567891/2"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* s : {"", "1/", "/2", "a", "1.5", "1/0", " 1", "1/-"}) {
    EXPECT_THROW(parse_rational(s), input_error) << s;
  }
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(pow2(70), BigInt(1) << 70);
  // Pascal's rule over a grid.
  for (long n = 1; n < 40; ++n) {
    for (long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(Rational, ToDoubleOnHugeRatios) {
  const Rational r(binomial(4000, 2000) * 3, binomial(4000, 2000) * 2);
  EXPECT_DOUBLE_EQ(to_double(r), 1.5);
  const Rational big(pow2(3000) + 1, pow2(2999));
  EXPECT_NEAR(to_double(big), 2.0, 1e-12);
}

TEST(Rational, SignificantFigures) {
  EXPECT_EQ(format_significant(0.0394864, 3), "0.0395");
  EXPECT_EQ(format_significant(0.0137216, 3), "0.0137");
  EXPECT_EQ(format_significant(2.87768, 4), "2.878");
  EXPECT_EQ(format_significant(12345.0, 2), "12000");
  EXPECT_EQ(format_significant(0.0, 3), "0.00");
}

TEST(Rational, SignificantFiguresCarry) {
  EXPECT_EQ(format_significant(0.09996, 3), "0.100");
  EXPECT_EQ(format_significant(9.9996, 4), "10.00");
  EXPECT_EQ(format_significant(-0.012345, 2), "-0.012");
  EXPECT_EQ(format_significant(1e-300, 2).size(), 303u);
}
