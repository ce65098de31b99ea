#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "speedrobust/rational.hpp"

namespace speedrobust {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), BigInt(-3));
  EXPECT_EQ(r.denominator(), BigInt(2));
  EXPECT_EQ(Rational(0, 7).denominator(), BigInt(1));
  EXPECT_EQ(Rational(10, 4), Rational(5, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, SerializesAsFractionOrInteger) {
  EXPECT_EQ(Rational(16, 15).to_string(), "16/15");
  EXPECT_EQ(Rational(-2, 5).to_string(), "-2/5");
  EXPECT_EQ(Rational(8, 1).to_string(), "8");
  EXPECT_EQ(Rational(0).to_string(), "0");
}

TEST(Rational, ParseAcceptsOnlyExactForms) {
  EXPECT_EQ(Rational::parse("8/5"), Rational(8, 5));
  EXPECT_EQ(Rational::parse("-11/20"), Rational(-11, 20));
  EXPECT_EQ(Rational::parse("45"), Rational(45));
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_THROW(Rational::parse("1.6"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1e3"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("3/-4"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), BigInt(3));
  EXPECT_EQ(Rational(7, 2).ceil(), BigInt(4));
  EXPECT_EQ(Rational(-7, 2).floor(), BigInt(-4));
  EXPECT_EQ(Rational(-7, 2).ceil(), BigInt(-3));
  EXPECT_EQ(Rational(4).floor(), BigInt(4));
  EXPECT_EQ(Rational(4).ceil(), BigInt(4));
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Rational(-11, 20).to_decimal(5), "-0.55000");
  EXPECT_EQ(Rational(1, 12).to_decimal(3), "0.083");
  EXPECT_EQ(Rational(1, 6).to_decimal(3), "0.167");
  EXPECT_EQ(Rational(2).to_decimal(2), "2.00");
  EXPECT_EQ(Rational(-1, 1000).to_decimal(2), "0.00");
}

TEST(FloorScale, Examples) {
  const Rational rho(8, 5);
  EXPECT_EQ(floor_scale(5, rho), 8);
  EXPECT_EQ(floor_scale(1, rho), 1);
  EXPECT_EQ(floor_scale(3, rho), 4);
}

TEST(CeilDiv, Examples) {
  EXPECT_EQ(ceil_div(45, 9), 5);
  EXPECT_EQ(ceil_div(13, 10), 2);
  EXPECT_EQ(ceil_div(0, 7), 0);
  EXPECT_EQ(ceil_div(BigInt(13), BigInt(10)), BigInt(2));
}

TEST(FloorScale, BracketsProductProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> z_draw(1, 100000);
  std::uniform_int_distribution<std::int64_t> part(1, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t z = z_draw(rng);
    const Rational rho(part(rng), part(rng));
    const Rational floor_value(floor_scale(BigInt(z), rho));
    const Rational product = Rational(z) * rho;
    EXPECT_LE(floor_value, product);
    EXPECT_LT(product, floor_value + Rational(1));
  }
}

TEST(CeilDiv, MinimalityProperty) {
  for (std::int64_t c = 1; c <= 300; ++c) {
    for (std::int64_t m = 1; m <= 40; ++m) {
      const std::int64_t q = ceil_div(c, m);
      EXPECT_GE(q * m, c);
      EXPECT_LT((q - 1) * m, c);
    }
  }
}

TEST(Rational, FieldLawsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = testing::random_rational(rng, 50, 37) - Rational(25);
    const Rational b = testing::random_rational(rng, 50, 12);
    const Rational c = testing::random_rational(rng, 50, 91) + Rational(1, 3);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    // canonical form is idempotent
    EXPECT_EQ(Rational(a.numerator(), a.denominator()), a);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

TEST(Rational, HugeIntegersStayExact) {
  const BigInt u = ipow(60, 60);
  const BigInt l = u - ipow(59, 60);
  const Rational r(u, l);
  EXPECT_EQ(r * Rational(l), Rational(u));
  EXPECT_GT(u, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

}  // namespace
}  // namespace speedrobust
