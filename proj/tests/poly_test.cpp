#include <gtest/gtest.h>

#include "meadow/error.hpp"
#include "meadow/poly.hpp"

namespace meadow {
namespace {

PosPoly x() { return PosPoly::variable("x"); }
PosPoly y() { return PosPoly::variable("y"); }

TEST(Monomial, ProductMergesExponents) {
  Monomial a = {{"x", 2}, {"z", 1}};
  Monomial b = {{"x", 1}, {"y", 3}};
  Monomial expected = {{"x", 3}, {"y", 3}, {"z", 1}};
  EXPECT_EQ(monomial_product(a, b), expected);
  EXPECT_EQ(total_degree(expected), 7u);
  EXPECT_EQ(monomial_product({}, a), a);
}

TEST(Monomial, GrlexOrder) {
  GrlexGreater gt;
  EXPECT_TRUE(gt({{"x", 2}}, {{"x", 1}, {"y", 1}}));
  EXPECT_FALSE(gt({{"x", 1}, {"y", 1}}, {{"x", 2}}));
  EXPECT_TRUE(gt({{"y", 3}}, {{"x", 1}, {"y", 1}}));
  EXPECT_TRUE(gt({{"x", 1}}, {{"y", 1}}));
  EXPECT_TRUE(gt({{"x", 1}}, {}));
  EXPECT_FALSE(gt({{"x", 1}}, {{"x", 1}}));
}

TEST(PosPoly, DefaultIsOne) {
  PosPoly one;
  EXPECT_TRUE(one.is_constant());
  EXPECT_EQ(one.constant_value(), 1);
  EXPECT_EQ(one.to_string(), "1");
}

TEST(PosPoly, RejectsNonPositiveCoefficients) {
  EXPECT_THROW(PosPoly::constant(0), Error);
  EXPECT_THROW(PosPoly::from_terms({}), Error);
  EXPECT_THROW(PosPoly::from_terms({{Monomial{{"x", 1}}, mpz_class(0)}}), Error);
  EXPECT_THROW(PosPoly::from_terms({{Monomial{{"x", 0}}, mpz_class(1)}}), Error);
}

TEST(PosPoly, BinomialSquare) {
  PosPoly p = x().plus(PosPoly());
  PosPoly sq = p.times(p);
  PosPoly::TermMap expected = {{Monomial{{"x", 2}}, 1}, {Monomial{{"x", 1}}, 2}, {Monomial{}, 1}};
  EXPECT_EQ(sq, PosPoly::from_terms(expected));
  EXPECT_EQ(sq.to_string(), "x^2 + 2*x + 1");
}

TEST(PosPoly, RenderingOrder) {
  PosPoly p = x().times(x()).times(y()).times(PosPoly::constant(2)).plus(x()).plus(PosPoly::constant(3));
  EXPECT_EQ(p.to_string(), "2*x^2*y + x + 3");
}

TEST(PosPoly, SumAndProductAreCommutative) {
  PosPoly a = x().plus(PosPoly::constant(2));
  PosPoly b = y().times(x()).plus(y());
  EXPECT_EQ(a.plus(b), b.plus(a));
  EXPECT_EQ(a.times(b), b.times(a));
  EXPECT_EQ(a.times(b.plus(a)), a.times(b).plus(a.times(a)));
}

TEST(PosPoly, Evaluate) {
  PosPoly p = x().times(y()).plus(PosPoly());
  EXPECT_EQ(p.evaluate({{"x", Rational(2)}, {"y", Rational::parse("1/4")}}), Rational::parse("3/2"));
  try {
    p.evaluate({{"x", Rational(1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnboundVariable);
  }
}

TEST(PosPoly, SizeLimit) {
  PosPoly a = x().plus(y()).plus(PosPoly());
  PosPoly p = a;
  for (int i = 0; i < 4; ++i) p = p.times(a);
  EXPECT_EQ(p.monomial_count(), 21u);
  try {
    p.times(a, 25);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeLimit);
  }
  EXPECT_THROW(x().plus(y(), 1), Error);
}

TEST(PolyFraction, Rendering) {
  EXPECT_EQ((PolyFraction{x(), PosPoly()}).to_string(), "x");
  EXPECT_EQ((PolyFraction{x().times(y()).plus(PosPoly()), y()}).to_string(), "(x*y + 1) / y");
  EXPECT_EQ((PolyFraction{PosPoly(), x().plus(y())}).to_string(), "1 / (x + y)");
}

}  // namespace
}  // namespace meadow
