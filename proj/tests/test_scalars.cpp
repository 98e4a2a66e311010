#include <gtest/gtest.h>

#include "gen.hpp"

using namespace pinosp;

TEST(Scalars, DefiningRelations) {
  Scalar i(BaseNumber::i()), r(BaseNumber::sqrt2());
  EXPECT_EQ(i * i, Scalar(-1));
  EXPECT_EQ(r * r, Scalar(2));
  Scalar k = Scalar::kappa(0);
  EXPECT_EQ((k + Scalar(1)) * (k - Scalar(1)), k * k - Scalar(1));
  EXPECT_EQ(((k + Scalar(1)) * (k - Scalar(1))).to_string(), "-1 + k1^2");
}

TEST(Scalars, ZeroIsCanonical) {
  Scalar k = Scalar::kappa(1);
  Scalar z = k - k;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_EQ(BaseNumber(0, 0, 0, 0), BaseNumber(0));
}

TEST(Scalars, Substitution) {
  Scalar k = Scalar::kappa(0);
  std::vector<BaseNumber> zero{0}, three_halves{frac(3, 2)}, one{1};
  EXPECT_EQ((k * k + Scalar(1)).substitute(zero), Scalar(1));
  EXPECT_EQ(k.substitute(three_halves), Scalar(frac(3, 2)));
  EXPECT_EQ((Scalar(2) * k * Scalar(BaseNumber::i())).substitute(one), Scalar(BaseNumber(0, 2, 0, 0)));
  EXPECT_EQ((k * k).substitute(one).kappa_degree(), 0);
}

TEST(Scalars, SubstitutionNeedsEveryClass) {
  Scalar k2 = Scalar::kappa(1);
  std::vector<BaseNumber> one_value{1};
  EXPECT_THROW(k2.substitute(one_value), std::exception);
}

TEST(Scalars, DivisionByZeroThrows) { EXPECT_THROW(BaseNumber(0).inverse(), std::domain_error); }

TEST(Scalars, ParseAndPrint) {
  EXPECT_EQ(Scalar::parse("3/2"), Scalar(frac(3, 2)));
  EXPECT_EQ(Scalar::parse("i*i"), Scalar(-1));
  EXPECT_EQ(Scalar::parse("sqrt2^2"), Scalar(2));
  EXPECT_EQ(Scalar::parse("k1 + 2*k2"), Scalar::kappa(0) + Scalar(2) * Scalar::kappa(1));
  EXPECT_THROW(Scalar::parse("1 +"), ParseError);
  EXPECT_THROW(Scalar::parse("q"), ParseError);
}

TEST(ScalarsProperty, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Scalar a = gen::scalar(rng, 3), b = gen::scalar(rng, 3), c = gen::scalar(rng, 3);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(ScalarsProperty, SubstitutionIsAHomomorphism) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    Scalar a = gen::scalar(rng, 2), b = gen::scalar(rng, 2);
    std::vector<BaseNumber> v{gen::base(rng), gen::base(rng)};
    ASSERT_EQ((a * b).substitute(v), a.substitute(v) * b.substitute(v));
    ASSERT_EQ((a + b).substitute(v), a.substitute(v) + b.substitute(v));
  }
}

TEST(ScalarsProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    Scalar a = gen::scalar(rng, 3);
    ASSERT_EQ(Scalar::parse(a.to_string()), a) << a.to_string();
  }
}

TEST(ScalarsProperty, InverseOfBaseNumbers) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    BaseNumber b = gen::base(rng);
    if (b.is_zero()) continue;
    ASSERT_EQ(b * b.inverse(), BaseNumber(1));
  }
}
