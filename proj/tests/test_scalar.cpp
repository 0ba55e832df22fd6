#include "helpers.hpp"
#include "signfree/properties.hpp"
#include "signfree/scalar.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace signfree {
namespace {

using testing::frac;
using testing::root3;

TEST(Rational, CanonicalForm) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DivisionByZero);
}

TEST(Rational, ParseDecimalsExactly) {
  EXPECT_EQ(Rational::parse("2.1"), Rational(21, 10));
  EXPECT_EQ(Rational::parse("-6.1"), Rational(-61, 10));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("0.50"), Rational(1, 2));
  EXPECT_THROW(Rational::parse("2."), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(Rational, RoundDecimal) {
  EXPECT_EQ(Rational::round_decimal(0.5, 12), Rational(1, 2));
  EXPECT_EQ(Rational::round_decimal(-1.0 / 3.0, 3), Rational(-333, 1000));
  EXPECT_EQ(Rational::round_decimal(2.0 / 3.0, 3), Rational(667, 1000));
  EXPECT_THROW(Rational::round_decimal(NAN, 3), std::invalid_argument);
}

TEST(ExactScalar, Add) {
  EXPECT_EQ(frac(1, 3) + frac(2, 3), ExactScalar(1));
  EXPECT_TRUE((root3(1) + root3(-1)).is_zero());
  EXPECT_EQ(ExactScalar(Rational(4), Rational(1)) + root3(1), ExactScalar(Rational(4), Rational(2)));
}

TEST(ExactScalar, Multiply) {
  EXPECT_EQ(root3(1, 3) * root3(1, 3), frac(1, 3));
  const ExactScalar four_plus(Rational(4), Rational(1));
  EXPECT_EQ(four_plus * four_plus, ExactScalar(Rational(19), Rational(8)));
  EXPECT_EQ(four_plus * ExactScalar(1), four_plus);
}

TEST(ExactScalar, SubtractAndDivide) {
  EXPECT_EQ(ExactScalar(1) / ExactScalar::sqrt3(), root3(1, 3));
  const ExactScalar x(Rational(19), Rational(8));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(ExactScalar(6) / ExactScalar::sqrt3(), root3(2));
  EXPECT_THROW(ExactScalar(1) / ExactScalar(0), DivisionByZero);
}

TEST(ExactScalar, Sign) {
  EXPECT_EQ(ExactScalar(Rational(2), Rational(-1)).sign(), 1);
  EXPECT_EQ(ExactScalar(Rational(4), Rational(-3)).sign(), -1);
  EXPECT_EQ(ExactScalar(0).sign(), 0);
  EXPECT_EQ(ExactScalar(Rational(-2), Rational(1)).sign(), -1);
  EXPECT_EQ(ExactScalar(Rational(-1), Rational(1)).sign(), 1);
  EXPECT_EQ(root3(-1).sign(), -1);
}

TEST(ExactScalar, ToDouble) {
  EXPECT_DOUBLE_EQ(ExactScalar::sqrt3().to_double(), 1.7320508075688772);
  EXPECT_DOUBLE_EQ(ExactScalar(Rational(21, 10)).to_double(), 2.1);
  EXPECT_DOUBLE_EQ(frac(1, 3).to_double(), 1.0 / 3.0);
  // Cancellation-prone value: 97 - 56*sqrt3 = 1/(97 + 56*sqrt3).
  const ExactScalar tiny(Rational(97), Rational(-56));
  EXPECT_NEAR(tiny.to_double(), 1.0 / (97.0 + 56.0 * std::sqrt(3.0)), 1e-17);
}

TEST(ExactScalar, Rendering) {
  EXPECT_EQ(frac(1, 3).to_string(), "1/3");
  EXPECT_EQ(ExactScalar(-4).to_string(), "-4");
  EXPECT_EQ(root3(2).to_string(), "2*sqrt3");
  EXPECT_EQ(ExactScalar(Rational(1, 3), Rational(2, 3)).to_string(), "1/3+2/3*sqrt3");
  EXPECT_EQ(ExactScalar(Rational(4), Rational(-3)).to_string(), "4-3*sqrt3");
  EXPECT_EQ(root3(-1, 3).to_string(), "-1/3*sqrt3");
  EXPECT_EQ(ExactScalar(0).to_string(), "0");
}

TEST(ExactScalar, PowAndMin) {
  EXPECT_EQ(pow(ExactScalar::sqrt3(), 4), ExactScalar(9));
  EXPECT_EQ(pow(frac(2, 3), 0), ExactScalar(1));
  EXPECT_EQ(min(ExactScalar(2), ExactScalar::sqrt3()), ExactScalar::sqrt3());
}

TEST(ExactScalar, FieldLawsOnRandomSamples) {
  Sampler s(7);
  for (int i = 0; i < 1000; ++i) {
    const ExactScalar x = s.scalar(), y = s.scalar(), z = s.scalar();
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_GE((x * x).sign(), 0);
    if (!x.is_zero()) ASSERT_EQ(x * (ExactScalar(1) / x), ExactScalar(1));
    const double f = x.to_double();
    if (std::fabs(f) > 1e-9) ASSERT_EQ(f > 0 ? 1 : -1, x.sign()) << x.to_string();
  }
}

}  // namespace
}  // namespace signfree
