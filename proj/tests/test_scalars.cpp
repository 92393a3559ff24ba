#include "nsalg/error.hpp"
#include "nsalg/param_poly.hpp"
#include "nsalg/rational.hpp"
#include "nsalg/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nsalg;

namespace {

const Scalar l = Scalar::lambda();
const Scalar b = Scalar::b();

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7/5").str(), "-7/5");
  EXPECT_EQ(Rational::parse("4").str(), "4");
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(6, 0), Rational(1));
  EXPECT_EQ(binomial(3, 4), Rational(0));
}

TEST(Scalar, NormalizeExamples) {
  const ParamPoly L = ParamPoly::lambda();
  const ParamPoly B = ParamPoly::b();
  EXPECT_EQ(Scalar::normalize(L + ParamPoly(1), L + ParamPoly(1)), q(1));
  EXPECT_EQ(Scalar::normalize(L * Rational(2) + B * Rational(2), ParamPoly(2)), l + b);
  EXPECT_EQ(Scalar::normalize(L * L - B * B, L - B), l + b);
  EXPECT_THROW(Scalar::normalize(L, ParamPoly()), Error);
}

TEST(Scalar, NormalizeDivisionByZeroMessage) {
  try {
    Scalar::normalize(ParamPoly::lambda(), ParamPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "division by zero polynomial");
  }
}

TEST(Scalar, Arithmetic) {
  EXPECT_TRUE(((l + b) - (l + b)).is_zero());
  EXPECT_EQ(q(1, 12) * q(6), q(1, 2));
  const Scalar lk = l + q(3);
  EXPECT_EQ(lk * (q(1) / lk), q(1));
  EXPECT_THROW(q(1) / q(0), Error);
}

TEST(Scalar, CanonicalDenominatorIsMonic) {
  Scalar s = q(1) / (q(2) * l + q(4));
  EXPECT_EQ(s.den(), ParamPoly::lambda() + ParamPoly(2));
  EXPECT_EQ(s.num(), ParamPoly(Rational(1, 2)));
  EXPECT_EQ(s.str(), "(1/2)/(l + 2)");
}

TEST(Scalar, Substitute) {
  const Scalar coeff = l + q(2) + b * q(2);  // lambda + k + b(n+1) at k=2, n=1
  EXPECT_EQ(coeff.substitute(Rational(0), Rational(0)), q(2));
  EXPECT_EQ((l + b).substitute(Rational(1, 3), Rational(1, 4)), q(7, 12));
  EXPECT_EQ((l + b).substitute(Rational(1), std::nullopt), b + q(1));
  try {
    (q(1) / l).substitute(Rational(0), std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("l"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("vanishes"), std::string::npos);
  }
}

TEST(Scalar, Parse) {
  EXPECT_EQ(Scalar::parse("l"), l);
  EXPECT_EQ(Scalar::parse("lambda"), l);
  EXPECT_EQ(Scalar::parse("b"), b);
  EXPECT_EQ(Scalar::parse("-3/4"), q(-3, 4));
  EXPECT_THROW(Scalar::parse("z"), ParseError);
}

TEST(ParamPoly, GcdAndExactDivision) {
  const ParamPoly L = ParamPoly::lambda();
  const ParamPoly B = ParamPoly::b();
  const ParamPoly f = (L + B) * (L - B * Rational(2) + ParamPoly(1));
  const ParamPoly g = (L + B) * (L * B + ParamPoly(3));
  EXPECT_EQ(gcd(f, g), L + B);
  auto quot = f.divide_exact(L + B);
  ASSERT_TRUE(quot.has_value());
  EXPECT_EQ(*quot, L - B * Rational(2) + ParamPoly(1));
  EXPECT_FALSE(g.divide_exact(L - B).has_value());
}

// Field axioms on random rational functions of degree <= 2.
TEST(ScalarProperty, FieldAxioms) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto random_poly = [&] {
    ParamPoly p;
    for (int dl = 0; dl <= 2; ++dl)
      for (int db = 0; db + dl <= 2; ++db) p += ParamPoly::monomial({dl, db}, Rational(coef(rng)));
    return p;
  };
  auto random_scalar = [&] {
    ParamPoly den;
    while (den.is_zero()) den = random_poly();
    return Scalar::normalize(random_poly(), den);
  };
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) EXPECT_EQ(x / x, q(1));
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
  }
}
