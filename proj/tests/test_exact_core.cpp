#include <gtest/gtest.h>

#include "degen/errors.hpp"
#include "degen/factorial.hpp"
#include "degen/lambda_poly.hpp"
#include "oracles.hpp"

namespace degen {
namespace {

using oracle::lp;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_EQ(Rational(-6, -4), Rational(3, 2));
  EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).str(), "5/6");
  EXPECT_EQ((Rational(2, 3) * Rational(3, 4)).str(), "1/2");
}

TEST(Rational, ZeroDivision) {
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational{}.inverse(), DivisionByZero);
  EXPECT_THROW(Rational{1} / Rational{}, DivisionByZero);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("+4"), Rational(4));
  EXPECT_EQ(parse_rational("-1/3", true), Rational(-1, 3));
  EXPECT_THROW(parse_rational("2/4", true), ParseError);
  EXPECT_THROW(parse_rational("3/1", true), ParseError);
  EXPECT_THROW(parse_rational("-0", true), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, BigValuesStayExact) {
  EXPECT_EQ(factorial(30).str(), "265252859812191058636308480000000");
  EXPECT_EQ((factorial(30) / factorial(29)), Rational(30));
}

TEST(Poly, CanonicalZero) {
  EXPECT_TRUE(LambdaPoly{}.is_zero());
  EXPECT_EQ(LambdaPoly{}.degree(), std::nullopt);
  EXPECT_EQ(LambdaPoly({Rational{0}, Rational{0}}), LambdaPoly{});
  EXPECT_TRUE(LambdaPoly({Rational{1}, Rational{0}}).coefficients().size() == 1);
  EXPECT_EQ(LambdaPoly(Rational{3}).degree(), 0U);
}

TEST(Poly, MulExamples) {
  const LambdaPoly one_plus{Rational{1}, Rational{1}};
  const LambdaPoly one_minus{Rational{1}, Rational{-1}};
  EXPECT_EQ(one_plus * one_minus, lp("1 + -1*L^2"));
  EXPECT_EQ(LambdaPoly{} * lp("3 + -2*L"), LambdaPoly{});
  EXPECT_EQ(one_minus * lp("1 + -2*L"), lp("1 + -3*L + 2*L^2"));
  EXPECT_EQ(one_minus * lp("1 + -2*L"), falling(Rational{1}, 3));
}

TEST(Poly, EvalExamples) {
  const LambdaPoly p = lp("1 + -3*L + 2*L^2");
  EXPECT_EQ(p.eval(Rational{0}), Rational{1});
  EXPECT_EQ(p.eval(Rational(1, 2)), Rational{0});
  EXPECT_EQ(LambdaPoly{}.eval(Rational{7}), Rational{0});
}

TEST(Poly, ComposeAndMap) {
  const LambdaPoly p = lp("1 + 2*L + 3*L^2");
  const LambdaPoly q{Rational{1}, Rational{-1}};  // 1 - L
  // p(1 - L) = 1 + 2 - 2L + 3(1 - 2L + L^2)
  EXPECT_EQ(p.compose(q), lp("6 + -8*L + 3*L^2"));
  EXPECT_EQ(negate_lambda(p), lp("1 + -2*L + 3*L^2"));
  EXPECT_EQ(p.map([](const Rational&) { return Rational{}; }), LambdaPoly{});
}

TEST(Poly, UnitsOfLambdaPoly) {
  using T = ring_traits<LambdaPoly>;
  EXPECT_TRUE(T::is_unit(LambdaPoly(Rational{-2})));
  EXPECT_FALSE(T::is_unit(LambdaPoly{}));
  EXPECT_FALSE(T::is_unit(lambda()));
  EXPECT_EQ(T::inverse(LambdaPoly(Rational{-2})), LambdaPoly(Rational(-1, 2)));
  EXPECT_THROW(T::inverse(lambda()), NonUnitConstantTerm);
}

TEST(PolyProperty, RingAxiomsAndEvalHomomorphism) {
  oracle::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    const LambdaPoly a = gen.lambda_poly(4);
    const LambdaPoly b = gen.lambda_poly(4);
    const LambdaPoly c = gen.lambda_poly(4);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a - a, LambdaPoly{});
    const Rational v = gen.rational();
    ASSERT_EQ((a * b).eval(v), a.eval(v) * b.eval(v));
  }
}

TEST(PolyProperty, NestedRingAxioms) {
  oracle::Gen gen(11);
  for (int i = 0; i < 60; ++i) {
    const XPoly a = gen.x_poly(3, 2);
    const XPoly b = gen.x_poly(3, 2);
    const XPoly c = gen.x_poly(3, 2);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    const LambdaPoly v = gen.lambda_poly(2);
    ASSERT_EQ((a * b).eval(v), a.eval(v) * b.eval(v));
  }
}

TEST(Series, MulExamples) {
  const Series<Rational> s(2, {Rational{1}, Rational{1}, Rational(1, 2)});
  const Series<Rational> t(2, {Rational{1}, Rational{-1}});
  EXPECT_EQ(s * t, Series<Rational>(2, {Rational{1}, Rational{0}, Rational(-1, 2)}));
  EXPECT_EQ(s * Series<Rational>::one(2), s);
}

TEST(Series, DegenerateExpSquared) {
  const LambdaSeries e = degenerate_exp(Rational{1}, 2);
  const LambdaSeries sq = e * e;
  EXPECT_EQ(sq[0], LambdaPoly(Rational{1}));
  EXPECT_EQ(sq[1], LambdaPoly(Rational{2}));
  EXPECT_EQ(sq[2], lp("2 + -1*L"));  // (4 - 2L)/2!
}

TEST(Series, OrderIsMinimumOfOperands) {
  const Series<Rational> a = Series<Rational>::one(5);
  const Series<Rational> b = Series<Rational>::one(3);
  EXPECT_EQ((a * b).order(), 3U);
  EXPECT_EQ((a + b).order(), 3U);
  EXPECT_EQ((b - a).order(), 3U);
}

TEST(Series, InverseExamples) {
  const Series<Rational> one_minus_t(3, {Rational{1}, Rational{-1}});
  EXPECT_EQ(one_minus_t.inverse(), Series<Rational>(3, {Rational{1}, Rational{1}, Rational{1}, Rational{1}}));
  EXPECT_EQ(Series<Rational>::one(4).inverse(), Series<Rational>::one(4));

  const LambdaSeries q = (degenerate_exp(Rational{1}, 2) - LambdaSeries::one(2)).shift_down(1).inverse();
  EXPECT_EQ(q.order(), 1U);
  EXPECT_EQ(q[0], LambdaPoly(Rational{1}));
  EXPECT_EQ(q[1], lp("-1/2 + 1/2*L"));
}

TEST(Series, InverseRequiresUnit) {
  EXPECT_THROW(Series<Rational>(2, {Rational{0}, Rational{1}}).inverse(), NonUnitConstantTerm);
  EXPECT_THROW(LambdaSeries(2, {lambda()}).inverse(), NonUnitConstantTerm);
}

TEST(Series, ShiftDownRequiresDivisibility) {
  EXPECT_THROW(Series<Rational>::one(3).shift_down(1), BadParameter);
  EXPECT_THROW(Series<Rational>(1).shift_down(2), IndexError);
}

TEST(SeriesProperty, InverseTimesSelfIsOne) {
  oracle::Gen gen(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<LambdaPoly> c{LambdaPoly(gen.nonzero_rational())};
    for (int k = 0; k < 6; ++k) c.push_back(gen.lambda_poly(2));
    const LambdaSeries s(6, c);
    ASSERT_EQ(s * s.inverse(), LambdaSeries::one(6));
  }
}

TEST(SeriesProperty, RingAxioms) {
  oracle::Gen gen(5);
  for (int i = 0; i < 50; ++i) {
    const auto make = [&] {
      std::vector<Rational> c;
      for (int k = 0; k < 5; ++k) c.push_back(gen.rational());
      return Series<Rational>(4, c);
    };
    const auto a = make();
    const auto b = make();
    const auto c = make();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

}  // namespace
}  // namespace degen
