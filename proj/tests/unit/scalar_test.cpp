#include <gtest/gtest.h>

#include <limits>
#include <sstream>

#include "holomatch/scalar.hpp"
#include "test_random.hpp"

namespace holomatch {
namespace {

using testing::Rng;

TEST(Rational, ReducesAndNormalizesSign) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, PromotesOnOverflowAndDemotesBack) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational x(big);
  Rational sq = x * x;
  EXPECT_FALSE(sq.is_small());
  Rational back = sq / x;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, x);
  Rational min(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ((-min).str(), "9223372036854775808");
  EXPECT_EQ(-(-min), min);
  Rational sum = x + x;
  EXPECT_EQ(sum.str(), "18446744073709551614");
  EXPECT_EQ(sum - x, x);
}

TEST(Rational, ParsesAndOrders) {
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(),
            "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_FALSE(Rational(1, 2) < Rational(1, 2));
}

TEST(Scalar, AdditionExamples) {
  EXPECT_EQ(Scalar(1) + Scalar::i(), Scalar(1, 1, 0, 0));
  Scalar x(Rational(3, 7), -2, Rational(1, 5), 9);
  EXPECT_EQ(x + Scalar(0), x);
  Scalar half_root(0, 0, Rational(1, 2), 0);
  EXPECT_EQ(half_root + half_root, Scalar::sqrt2());
}

TEST(Scalar, MultiplicationExamples) {
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_EQ(Scalar(1, 1, 0, 0) * Scalar(1, -1, 0, 0), Scalar(2));
  EXPECT_EQ(Scalar::i_sqrt2() * Scalar::i_sqrt2(), Scalar(-2));
  EXPECT_EQ(Scalar::i() * Scalar::sqrt2(), Scalar::i_sqrt2());
  EXPECT_EQ(Scalar::sqrt2() * Scalar::i_sqrt2(), Scalar(0, 2, 0, 0));
}

TEST(Scalar, InverseExamples) {
  EXPECT_EQ(Scalar(2).inverse(), Scalar(Rational(1, 2)));
  EXPECT_EQ(Scalar::i().inverse(), -Scalar::i());
  EXPECT_EQ(Scalar(1, 0, 1, 0).inverse(), Scalar(-1, 0, 1, 0));
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(1) / Scalar(0), DivisionByZero);
}

// (1 + √2)(−1 + √2) = −1 + 2 = 1, multiplied out independently of inverse().
TEST(Scalar, RationalizationOracle) {
  Scalar x(1, 0, 1, 0), y(-1, 0, 1, 0);
  EXPECT_TRUE((x * y).is_one());
}

TEST(Scalar, InverseOfRandomValues) {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    Scalar x = testing::random_nonzero_scalar(rng);
    ASSERT_TRUE((x * x.inverse()).is_one()) << x;
  }
}

TEST(Scalar, FieldAxiomsOnRandomValues) {
  Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    Scalar x = testing::random_scalar(rng), y = testing::random_scalar(rng),
           z = testing::random_scalar(rng);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x - x, Scalar(0));
    ASSERT_EQ(x * Scalar(1), x);
    if (!y.is_zero()) ASSERT_EQ((x / y) * y, x);
  }
}

TEST(Scalar, ConjugateIsMultiplicative) {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    Scalar x = testing::random_scalar(rng), y = testing::random_scalar(rng);
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
  }
}

TEST(Scalar, PrintsCanonically) {
  EXPECT_EQ(Scalar(0).str(), "0");
  EXPECT_EQ(Scalar(1, 1, 0, 0).str(), "1 + 1i");
  EXPECT_EQ(Scalar(Rational(-1, 2), 0, 0, 3).str(), "-1/2 + 3ir2");
  EXPECT_EQ(Scalar(0, -1, 0, 0).str(), "-1i");
  std::ostringstream os;
  os << Scalar(Rational(1, 2), 3, 1, 0);
  EXPECT_EQ(os.str(), "1/2 + 3i + 1r2");
}

TEST(Scalar, ParsesLiteralGrammar) {
  EXPECT_EQ(Scalar::parse("1/2 + 3i + 1r2"), Scalar(Rational(1, 2), 3, 1, 0));
  EXPECT_EQ(Scalar::parse("  -4 ir2 "), Scalar(0, 0, 0, -4));
  EXPECT_EQ(Scalar::parse("i"), Scalar::i());
  EXPECT_EQ(Scalar::parse("-r2"), -Scalar::sqrt2());
  EXPECT_EQ(Scalar::parse("2 \xE2\x88\x92 3i"), Scalar(2, -3, 0, 0));
  EXPECT_EQ(Scalar::parse("1 + 1 + i"), Scalar(2, 1, 0, 0));
  EXPECT_EQ(Scalar::parse("0"), Scalar(0));
  EXPECT_THROW(Scalar::parse(""), ParseError);
  EXPECT_THROW(Scalar::parse("3i4"), ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), ParseError);
  EXPECT_THROW(Scalar::parse("3x"), ParseError);
}

TEST(Scalar, PrintParseRoundTrip) {
  Rng rng(14);
  for (int t = 0; t < 500; ++t) {
    Scalar x = testing::random_scalar(rng, 1000);
    ASSERT_EQ(Scalar::parse(x.str()), x) << x;
    ASSERT_EQ(Scalar::parse(x.str()).str(), x.str());
  }
}

}  // namespace
}  // namespace holomatch
