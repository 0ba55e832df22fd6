#include "helpers.hpp"
#include "signfree/properties.hpp"
#include "signfree/triple.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace signfree {
namespace {

using testing::root3;
using testing::to_vec;

Triple T(ExactScalar a, ExactScalar b, ExactScalar c) { return {std::move(a), std::move(b), std::move(c)}; }

// i as a (3)-vector: (1/sqrt3, 2/sqrt3, 0)
const Triple kI = T(root3(1, 3), root3(2, 3), 0);

TEST(Triple, Add) {
  EXPECT_EQ(T(1, 1, 1) + T(2, 3, 1), T(3, 4, 2));
  EXPECT_TRUE(equivalent(T(1, 1, 1) + T(2, 3, 1), T(2, 3, 1)));
  EXPECT_EQ(T(0, 0, 0) + T(2, 3, 1), T(2, 3, 1));
  EXPECT_EQ(T(1, 2, 0) + T(2, 0, 1), T(3, 2, 1));
}

TEST(Triple, MultiplyWorkedExamples) {
  EXPECT_EQ(T(2, 1, 0) * T(0, 2, 1), T(1, 4, 4));
  EXPECT_EQ(T(1, 1, 0) * T(1, 1, 0), T(1, 2, 1));
  EXPECT_EQ(T(1, 2, 0) * T(1, 2, 0), T(1, 4, 4));
  EXPECT_EQ(kI * kI, T(ExactScalar::fraction(1, 3), ExactScalar::fraction(4, 3), ExactScalar::fraction(4, 3)));
  EXPECT_EQ(reduce(kI * kI), T(0, 1, 1));

  const ExactScalar four_plus(Rational(4), Rational(1));
  const Triple z = T(four_plus, root3(2), 0);
  const Triple zbar = T(four_plus, 0, root3(2));
  EXPECT_EQ(conj(z), zbar);
  const Triple product = z * zbar;
  EXPECT_EQ(product, T(ExactScalar(Rational(31), Rational(8)), ExactScalar(Rational(6), Rational(8)),
                       ExactScalar(Rational(6), Rational(8))));
  EXPECT_EQ(reduce(product), T(25, 0, 0));
}

TEST(Triple, BasisTable) {
  const Triple a = T(1, 0, 0), b = T(0, 1, 0), c = T(0, 0, 1);
  EXPECT_EQ(a * b, b);
  EXPECT_EQ(b * b, c);
  EXPECT_EQ(b * c, a);
  EXPECT_EQ(c * c, b);
}

TEST(Triple, MultiplyMatchesCyclicConvolution) {
  Sampler s(21);
  for (int i = 0; i < 200; ++i) {
    const Triple x = s.triple(), y = s.triple();
    const auto expected = oracle::convolve(to_vec(x), to_vec(y));
    const auto got = to_vec(x * y);
    for (int k = 0; k < 3; ++k) ASSERT_NEAR(got[k], expected[k], 1e-9);
  }
}

TEST(Triple, Reduce) {
  EXPECT_EQ(reduce(T(2, 3, 1)), T(1, 2, 0));
  EXPECT_EQ(reduce(T(1, 4, 4)), T(0, 3, 3));
  EXPECT_EQ(reduce(T(5, 5, 5)), T(0, 0, 0));
}

TEST(Triple, Equivalence) {
  EXPECT_TRUE(equivalent(T(0, 0, 0), T(5, 5, 5)));
  EXPECT_TRUE(equivalent(T(1, 1, 1), T(5, 5, 5)));
  EXPECT_TRUE(equivalent(T(1, 4, 4), T(0, 3, 3)));
  EXPECT_FALSE(equivalent(T(1, 0, 0), T(0, 1, 0)));
}

TEST(Triple, NormSquared) {
  EXPECT_EQ(norm_sq(T(3, 0, 5)), ExactScalar(19));
  EXPECT_TRUE(norm_sq(T(7, 7, 7)).is_zero());
  EXPECT_EQ(norm_sq(T(4, 6, 0)), ExactScalar(16 + 36 - 24));
  EXPECT_DOUBLE_EQ(norm(T(5, 4, 4)), 1.0);
  EXPECT_NEAR(norm(T(3, 0, 5)), std::sqrt(19.0), 1e-15);
  EXPECT_EQ(norm(T(0, 0, 0)), 0.0);
}

TEST(Triple, NormAgreesWithGeometricLength) {
  Sampler s(22);
  for (int i = 0; i < 500; ++i) {
    const Triple x = s.triple();
    ASSERT_NEAR(norm_sq(x).to_double(), oracle::law_of_cosine_sq(to_vec(x)), 1e-9);
  }
}

TEST(Triple, Conjugate) {
  EXPECT_EQ(conj(T(3, 2, 2)), T(3, 2, 2));
  EXPECT_EQ(conj(T(0, 1, 0)), T(0, 0, 1));
}

TEST(Triple, ToComplex) {
  // Expected values from direct evaluation of a + b w + c w^2.
  const auto minus_one = oracle::evaluate({0, 1, 1});
  const auto i = oracle::evaluate(to_vec(kI));
  EXPECT_NEAR(minus_one.real(), -1.0, 1e-15);
  EXPECT_NEAR(minus_one.imag(), 0.0, 1e-15);
  EXPECT_NEAR(i.real(), 0.0, 1e-15);
  EXPECT_NEAR(i.imag(), 1.0, 1e-15);

  EXPECT_NEAR(std::abs(to_complex(T(0, 1, 1)) - ComplexValue(-1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(to_complex(kI) - ComplexValue(0, 1)), 0.0, 1e-15);
  EXPECT_EQ(to_complex(T(1, 0, 0)), ComplexValue(1, 0));
}

TEST(Triple, ComplexToTriple) {
  EXPECT_EQ(complex_to_triple(ComplexValue(-1, 0)), T(0, 1, 1));
  EXPECT_EQ(complex_to_triple(ComplexValue(0, 1)), kI);
  EXPECT_EQ(complex_to_triple(ComplexValue(0, 0)), T(0, 0, 0));
  EXPECT_EQ(complex_to_triple(ComplexValue(0, -1)), T(root3(1, 3), 0, root3(2, 3)));
  EXPECT_THROW(complex_to_triple(ComplexValue(INFINITY, 0)), std::invalid_argument);
  EXPECT_THROW(complex_to_triple(ComplexValue(0, NAN)), std::invalid_argument);
}

TEST(Triple, ComplexRoundTrip) {
  Sampler s(23);
  for (int i = 0; i < 1000; ++i) {
    const ComplexValue z(s.real(-100, 100), s.real(-100, 100));
    const Triple t = complex_to_triple(z);
    ASSERT_TRUE(t.is_reduced());
    ASSERT_LT(std::abs(oracle::evaluate(to_vec(t)) - z), 1e-9);
  }
}

TEST(Triple, ScaleRejectsNegative) {
  EXPECT_EQ(scale(ExactScalar::fraction(1, 3), T(1, 4, 4)),
            T(ExactScalar::fraction(1, 3), ExactScalar::fraction(4, 3), ExactScalar::fraction(4, 3)));
  EXPECT_EQ(scale(0, T(1, 2, 3)), T(0, 0, 0));
  EXPECT_EQ(scale(1, T(1, 2, 3)), T(1, 2, 3));
  EXPECT_THROW(scale(-1, T(1, 2, 3)), NegativeValue);
  EXPECT_THROW(T(0, -1, 0), NegativeValue);
}

TEST(Triple, LawsOnRandomSamples) {
  Sampler s(24);
  for (int i = 0; i < 1000; ++i) {
    const Triple x = s.triple(), y = s.triple(), z = s.triple();
    ASSERT_TRUE(equivalent(x * y, y * x));
    ASSERT_TRUE(equivalent((x * y) * z, x * (y * z)));
    ASSERT_TRUE(equivalent(x * (y + z), x * y + x * z));
    ASSERT_TRUE(equivalent((x + s.constant_triple()) * y, x * y));
    ASSERT_EQ(norm_sq(x * y), norm_sq(x) * norm_sq(y));
    ASSERT_LE(norm(x + y), norm(x) + norm(y) + 1e-9);
    ASSERT_LT(std::abs(to_complex(x * y) - to_complex(x) * to_complex(y)), 1e-9);
    ASSERT_LT(std::abs(to_complex(x + y) - (to_complex(x) + to_complex(y))), 1e-9);
    ASSERT_TRUE(equivalent(x * conj(x), T(norm_sq(x), 0, 0)));
  }
}

}  // namespace
}  // namespace signfree
