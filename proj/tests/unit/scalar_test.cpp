#include <gtest/gtest.h>

#include <bjortho/bjortho.hpp>

using namespace bjo;

TEST(Scalar, ParsesFractionsDecimalsAndExponents) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-3.25"), Rational(-13, 4));
  EXPECT_EQ(parse_rational("0.5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("012"), Rational(12));
  EXPECT_EQ(parse_rational("1.5e-3"), Rational(3, 2000));
  EXPECT_EQ(parse_rational("2E2"), Rational(200));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
}

TEST(Scalar, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1..2", "--1", "1e", "inf", "0x10", "1/-2"})
    EXPECT_THROW(parse_rational(bad), PreconditionError) << bad;
}

TEST(Scalar, RationalsStayReduced) {
  Scalar s = Scalar::parse("10/4");
  EXPECT_TRUE(s.exact());
  EXPECT_EQ(s.str(), "5/2");
  EXPECT_EQ((s * Scalar::parse("2/5")).str(), "1");
}

TEST(Scalar, MixingWithFloatGivesFloatAndPropagatesTolerance) {
  Scalar e = Scalar::parse("1/3");
  Scalar f = Scalar::approx(0.5, 1e-9);
  Scalar sum = e + f;
  EXPECT_FALSE(sum.exact());
  EXPECT_NEAR(sum.value(), 5.0 / 6.0, 1e-15);
  EXPECT_GE(sum.tolerance(), 1e-9);
  EXPECT_THROW((void)sum.rational(), PreconditionError);
}

TEST(Scalar, FloatsPrintWithSeventeenDigitsAndRoundTrip) {
  double v = 0.1 + 0.2;
  Scalar s = Scalar::approx(v);
  EXPECT_EQ(s.str(), "0.30000000000000004");
  EXPECT_EQ(to_double(parse_rational(s.str())), v);
  EXPECT_EQ(Scalar::approx(-0.0).str(), "0");
  double tiny = 1.2345678901234567e-7;
  EXPECT_EQ(to_double(parse_rational(Scalar::approx(tiny).str())), tiny);
}

TEST(Scalar, SqrtIsExactOnSquares) {
  EXPECT_EQ(sqrt(Scalar::parse("9/16")).str(), "3/4");
  Scalar r = sqrt(Scalar::parse("2"));
  EXPECT_FALSE(r.exact());
  EXPECT_NEAR(r.value(), std::sqrt(2.0), 1e-15);
}

TEST(Scalar, ApproxEqualUsesTolerances) {
  EXPECT_TRUE(approx_equal(Scalar::approx(1.0 + 1e-12), Scalar(1)));
  EXPECT_FALSE(approx_equal(Scalar::parse("1/3"), Scalar::parse("333/1000")));
  EXPECT_EQ(Scalar::approx(1e-12).sign(), 0);
  EXPECT_EQ(Scalar::parse("-1/1000000000000").sign(), -1);
}

TEST(Vector, ParsesListsAndReportsOffendingEntry) {
  Vector v = parse_vector("1,-1/2,3/10");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(to_string(v), "(1,-1/2,3/10)");
  EXPECT_THROW(parse_vector("1,,2"), PreconditionError);
  try {
    parse_vector("1,x");
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("x"), std::string::npos);
  }
}
