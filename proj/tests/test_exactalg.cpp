#include <gtest/gtest.h>

#include "support.hpp"

using namespace liebw;
using liebw::test::P;

TEST(Rational, ParsesToLowestTerms) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4/2"), Rational(-2));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_THROW(parse_rational("10/-4"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(PolyExpr, ExpandsProducts) {
  EXPECT_EQ(P("(eta + 1)^2"), P("eta^2 + 2*eta + 1"));
  EXPECT_EQ(P("(a - b)*(a + b)"), P("a^2 - b^2"));
  EXPECT_TRUE((P("x*y") - P("y*x")).is_zero());
  EXPECT_EQ(P("1/2*eta") * 2, P("eta"));
}

TEST(PolyExpr, CanonicalStringRoundTrips) {
  for (const char* s : {"0", "1", "-1/2", "eta", "2*eta^2 - 1/2*k", "s^-1", "a*b^3 + 7"}) {
    const PolyExpr p = P(s);
    EXPECT_EQ(PolyExpr::parse(p.str()), p) << s;
  }
  EXPECT_EQ(P("0").str(), "0");
}

TEST(PolyExpr, SubstitutionAndEvaluation) {
  const PolyExpr kappa = P("eta^2").substitute("eta", P("1/2*s^2"));
  EXPECT_EQ(kappa, P("1/4*s^4"));
  EXPECT_DOUBLE_EQ(P("2*eta - 1").eval({{"eta", 0.75}}), 0.5);
  EXPECT_EQ(P("x^2 + y").eval_exact({{"x", Rational(1, 3)}, {"y", Rational(2)}}), Rational(19, 9));
  EXPECT_THROW(P("eta").eval({}), UnassignedParameter);
}

TEST(PolyExpr, LaurentUnits) {
  EXPECT_EQ(P("s") * P("s^-1"), P("1"));
  EXPECT_EQ(P("2*s^3").inverse(), P("1/2*s^-3"));
  EXPECT_THROW(P("s + 1").inverse(), DomainError);
  EXPECT_THROW(P("s^-1").eval({{"s", 0.0}}), DomainError);
  EXPECT_THROW(P("s + 1").pow(-1), DomainError);
}

TEST(PolyExpr, ContentAndPrimitivePart) {
  const PolyExpr p = P("-4*a^2*b + 6*a*b^2");
  EXPECT_EQ(p.content(), Rational(2));
  EXPECT_EQ(p.primitive_part(), P("2*a - 3*b").primitive_part());
  EXPECT_EQ(P("2*a - 3*b").primitive_part(), P("2*a - 3*b"));
}

TEST(PolyExprProperty, RingAxiomsAndEvaluationHomomorphism) {
  std::mt19937_64 rng(7);
  const std::vector<std::string> vars{"a", "b", "eta"};
  const Assignment at{{"a", 0.3}, {"b", -1.7}, {"eta", 0.45}};
  const ExactAssignment exact{{"a", test::Q(3, 10)}, {"b", test::Q(-17, 10)}, {"eta", test::Q(9, 20)}};
  for (int trial = 0; trial < 200; ++trial) {
    const PolyExpr x = test::random_poly(rng, vars), y = test::random_poly(rng, vars), z = test::random_poly(rng, vars);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) * z, x * z + y * z);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_TRUE((x - x).is_zero());
    ASSERT_EQ(PolyExpr::parse(x.str()), x) << x.str();
    ASSERT_EQ((x * y).eval_exact(exact), x.eval_exact(exact) * y.eval_exact(exact));
    ASSERT_NEAR((x + y * z).eval(at), x.eval(at) + y.eval(at) * z.eval(at), 1e-9);
  }
}
