#include "signfree/pair.hpp"
#include "signfree/properties.hpp"

#include <gtest/gtest.h>

namespace signfree {
namespace {

UPair P(ExactScalar a, ExactScalar b) { return {std::move(a), std::move(b)}; }
const ExactScalar kTwoPointOne = Rational(21, 10);

TEST(UPair, RejectsNegativeComponents) {
  EXPECT_THROW(P(-1, 0), NegativeValue);
  EXPECT_THROW(P(0, ExactScalar(Rational(1), Rational(-1))), NegativeValue);
  EXPECT_NO_THROW(P(ExactScalar(Rational(2), Rational(-1)), 0));
}

TEST(UPair, Add) {
  EXPECT_EQ(P(0, kTwoPointOne) + P(kTwoPointOne, 0), P(kTwoPointOne, kTwoPointOne));
  EXPECT_EQ(P(3, 1) + P(4, 6), P(7, 7));
  EXPECT_EQ(P(0, 0) + P(5, 2), P(5, 2));
}

TEST(UPair, MultiplyKeepsPrehistory) {
  EXPECT_EQ(P(3, 1) * P(4, 6), P(18, 22));
  EXPECT_EQ(P(1, 0) * P(5, 2), P(5, 2));
  EXPECT_EQ(P(1, 1) * P(5, 2), P(7, 7));
}

TEST(UPair, Reduce) {
  EXPECT_EQ(reduce(P(18, 22)), P(0, 4));
  EXPECT_EQ(reduce(P(4, Rational(61, 10))), P(0, kTwoPointOne));
  EXPECT_EQ(reduce(P(0, 4)), P(0, 4));
  EXPECT_EQ(P(0, 4).to_string(), "p{0,4}");
}

TEST(UPair, SignedConversions) {
  EXPECT_EQ(pair_from_signed(-kTwoPointOne), P(0, kTwoPointOne));
  EXPECT_EQ(pair_from_signed(0), P(0, 0));
  EXPECT_EQ(pair_from_signed(4), P(4, 0));
  EXPECT_EQ(pair_to_signed(P(18, 22)), ExactScalar(-4));
  EXPECT_EQ(pair_to_signed(P(1, 1)), ExactScalar(0));
  EXPECT_EQ(pair_to_signed(P(4, 3)), ExactScalar(1));
}

TEST(UPair, EqualityChains) {
  EXPECT_TRUE(equivalent(P(0, kTwoPointOne), P(4, Rational(61, 10))));
  EXPECT_TRUE(equivalent(P(0, kTwoPointOne), P(Rational(11, 10), Rational(32, 10))));
  EXPECT_TRUE(equivalent(P(1, 0), P(2, 1)));
  EXPECT_TRUE(equivalent(P(2, 1), P(4, 3)));
  EXPECT_FALSE(equivalent(P(1, 0), P(0, 1)));
  EXPECT_TRUE(equivalent(P(0, 0), P(4, 4)));
}

TEST(UPair, Scale) {
  EXPECT_EQ(scale(2, P(1, 3)), P(2, 6));
  EXPECT_THROW(scale(-1, P(1, 3)), NegativeValue);
}

TEST(UPair, HomomorphismAndLaws) {
  Sampler s(11);
  for (int i = 0; i < 1000; ++i) {
    const UPair x = s.pair(), y = s.pair(), z = s.pair();
    ASSERT_EQ(pair_to_signed(x * y), pair_to_signed(x) * pair_to_signed(y));
    ASSERT_EQ(pair_to_signed(x + y), pair_to_signed(x) + pair_to_signed(y));
    ASSERT_TRUE(equivalent(x * y, y * x));
    ASSERT_TRUE(equivalent((x * y) * z, x * (y * z)));
    ASSERT_TRUE(equivalent(x * (y + z), x * y + x * z));
    ASSERT_EQ(reduce(reduce(x)), reduce(x));
    ASSERT_TRUE(equivalent(x, reduce(x)));
    ASSERT_TRUE(reduce(x).is_reduced());
  }
}

TEST(UPair, SignedRoundTrip) {
  Sampler s(12);
  for (int i = 0; i < 1000; ++i) {
    const ExactScalar v = s.scalar();
    ASSERT_EQ(pair_to_signed(pair_from_signed(v)), v);
  }
}

}  // namespace
}  // namespace signfree
