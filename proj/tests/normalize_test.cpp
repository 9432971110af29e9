#include <gtest/gtest.h>

#include "meadow/error.hpp"
#include "meadow/eval.hpp"
#include "meadow/normalize.hpp"
#include "meadow/syntax.hpp"
#include "support/term_gen.hpp"

namespace meadow {
namespace {

const Term kOne = Term::one();
const Term kZero = Term::zero();
const Term kX = Term::var("x");
const Term kY = Term::var("y");

Term ul(std::uint64_t n) { return numeral(n, Signature::IAMDZ); }

PosPoly poly(const PosPoly::TermMap& m) { return PosPoly::from_terms(m); }

// Exact evaluation at `samples` points of the carrier, compared against the
// fraction's quotient.
void expect_fraction_matches(const Term& t, const PolyFraction& f, std::uint64_t seed, int samples = 20) {
  testing::TermGen gen(seed);
  const auto vars = free_vars(t);
  const std::vector<std::string> names(vars.begin(), vars.end());
  for (int i = 0; i < samples; ++i) {
    Assignment env = gen.assignment(names, Carrier::PositiveRationals);
    EXPECT_EQ(eval_total(t, env, Carrier::PositiveRationals), f.evaluate(env))
        << print(t) << " at " << format_assignment(env);
  }
}

TEST(SplitInverse, Examples) {
  EXPECT_EQ(split_inverse(Term::inv(kX)), (PolyFraction{PosPoly(), PosPoly::variable("x")}));
  EXPECT_EQ(split_inverse(Term::inv(Term::inv(kX))), (PolyFraction{PosPoly::variable("x"), PosPoly()}));

  Term t = Term::add(kX, Term::inv(kY));
  PolyFraction f = split_inverse(t);
  EXPECT_EQ(f.numerator, poly({{Monomial{{"x", 1}, {"y", 1}}, 1}, {Monomial{}, 1}}));
  EXPECT_EQ(f.denominator, PosPoly::variable("y"));
  expect_fraction_matches(t, f, 31);
}

TEST(SplitInverse, RejectsOutsideSignature) {
  EXPECT_THROW(split_inverse(Term::add(kX, kZero)), Error);
  EXPECT_THROW(split_inverse(Term::div(kX, kY)), Error);
}

TEST(PolyNormal, Examples) {
  Term xp1 = Term::add(kX, kOne);
  EXPECT_EQ(poly_normal(Term::mul(xp1, xp1)),
            poly({{Monomial{{"x", 2}}, 1}, {Monomial{{"x", 1}}, 2}, {Monomial{}, 1}}));
  EXPECT_EQ(poly_normal(Term::mul(ul(2), ul(3))), PosPoly::constant(6));
  EXPECT_EQ(poly_normal(Term::add(kX, kY)), poly({{Monomial{{"x", 1}}, 1}, {Monomial{{"y", 1}}, 1}}));
}

TEST(PolyNormal, Errors) {
  try {
    poly_normal(Term::inv(kX));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContainsInverse);
  }
  try {
    poly_normal(Term::mul(kX, kZero));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInSignature);
  }
}

TEST(PolyNormal, SizeLimit) {
  Term t = parse_term("(x + y + z + 1)^6");
  EXPECT_THROW(poly_normal(t, {.max_monomials = 50}), Error);
  EXPECT_NO_THROW(poly_normal(t));
}

TEST(ClosedNormalIamd, Examples) {
  EXPECT_EQ(closed_normal_iamd(Term::mul(ul(2), Term::inv(ul(4)))), ClosedNormal::fraction(1, 2));
  EXPECT_EQ(closed_normal_iamd(kOne), ClosedNormal::fraction(1, 1));
  Term t = Term::add(Term::inv(ul(2)), Term::inv(ul(3)));
  ClosedNormal c = closed_normal_iamd(t);
  EXPECT_EQ(c, ClosedNormal::fraction(5, 6));
  EXPECT_EQ(c.to_rational(), eval_total(t, {}, Carrier::PositiveRationals));
}

TEST(ClosedNormalIamd, Errors) {
  EXPECT_THROW(closed_normal_iamd(kX), Error);
  EXPECT_THROW(closed_normal_iamd(Term::add(kOne, kZero)), Error);
}

TEST(ClosedNormalIamdz, Examples) {
  EXPECT_TRUE(closed_normal_iamdz(Term::inv(kZero)).is_zero());
  EXPECT_TRUE(closed_normal_iamdz(Term::mul(kZero, ul(7))).is_zero());
  Term t = Term::add(kZero, Term::mul(ul(3), Term::inv(ul(9))));
  ClosedNormal c = closed_normal_iamdz(t);
  EXPECT_EQ(c, ClosedNormal::fraction(1, 3));
  EXPECT_EQ(c.to_rational(), eval_total(t, {}, Carrier::NonNegativeRationals));
}

TEST(ClosedNormalFull, Examples) {
  Term t = Term::neg(Term::mul(ul(2), Term::inv(ul(4))));
  ClosedNormal c = closed_normal_full(t);
  EXPECT_EQ(c, ClosedNormal::fraction(1, 2, true));
  EXPECT_EQ(c.to_string(), "-1/2");
  EXPECT_EQ(c.to_rational(), eval_total(t, {}, Carrier::AllRationals));
  EXPECT_TRUE(closed_normal_full(Term::inv(kZero)).is_zero());
  EXPECT_TRUE(closed_normal_full(Term::div(kOne, Term::add(kOne, Term::neg(kOne)))).is_zero());
}

TEST(ClosedNormal, Rendering) {
  EXPECT_EQ(ClosedNormal::zero_form().to_string(), "0");
  EXPECT_EQ(ClosedNormal::fraction(6, 3).to_string(), "2");
  EXPECT_EQ(ClosedNormal::fraction(4, 6).to_string(), "2/3");
  EXPECT_EQ(ClosedNormal::from_rational(Rational::parse("-9/12")).to_string(), "-3/4");
}

TEST(ZeroElim, Examples) {
  EXPECT_TRUE(std::holds_alternative<ZeroResult>(zero_elim(Term::mul(kX, kZero))));
  Term t = Term::add(kX, Term::mul(kZero, kY));
  ZeroElim z = zero_elim(t);
  ASSERT_TRUE(std::holds_alternative<Term>(z));
  EXPECT_EQ(std::get<Term>(z), kX);
  testing::TermGen gen(32);
  for (int i = 0; i < 20; ++i) {
    Assignment env = gen.assignment({"x", "y"}, Carrier::NonNegativeRationals);
    EXPECT_EQ(eval_total(t, env, Carrier::NonNegativeRationals),
              eval_total(kX, env, Carrier::NonNegativeRationals));
  }
  ZeroElim same = zero_elim(kX);
  ASSERT_TRUE(std::holds_alternative<Term>(same));
  EXPECT_EQ(std::get<Term>(same), kX);
  EXPECT_TRUE(std::holds_alternative<ZeroResult>(zero_elim(Term::inv(Term::add(kZero, kZero)))));
}

// Properties.

TEST(NormalizeProperties, ClosedIamdMatchesEval) {
  testing::TermGen gen(41);
  testing::GenConfig cfg{.sig = Signature::IAMD, .max_size = 30, .closed = true};
  for (int i = 0; i < 500; ++i) {
    Term t = gen.term(cfg);
    ClosedNormal c = closed_normal_iamd(t);
    ASSERT_FALSE(c.is_zero());
    EXPECT_EQ(gcd(c.numerator(), c.denominator()), 1);
    EXPECT_EQ(c.to_rational(), eval_total(t, {}, Carrier::PositiveRationals)) << print(t);
  }
}

TEST(NormalizeProperties, ClosedIamdzMatchesEval) {
  testing::TermGen gen(42);
  testing::GenConfig cfg{.sig = Signature::IAMDZ, .max_size = 30, .closed = true};
  for (int i = 0; i < 500; ++i) {
    Term t = gen.term(cfg);
    ClosedNormal c = closed_normal_iamdz(t);
    Rational v = eval_total(t, {}, Carrier::NonNegativeRationals);
    EXPECT_EQ(c.is_zero(), v.is_zero()) << print(t);
    EXPECT_EQ(c.to_rational(), v) << print(t);
  }
}

TEST(NormalizeProperties, ClosedFullMatchesEval) {
  testing::TermGen gen(43);
  for (Signature sig : {Signature::IMD, Signature::DMD}) {
    testing::GenConfig cfg{.sig = sig, .max_size = 30, .closed = true};
    for (int i = 0; i < 300; ++i) {
      Term t = gen.term(cfg);
      EXPECT_EQ(closed_normal_full(t).to_rational(), eval_total(t, {}, Carrier::AllRationals)) << print(t);
    }
  }
}

TEST(NormalizeProperties, SplitInverseMatchesEval) {
  testing::TermGen gen(44);
  testing::GenConfig cfg{.sig = Signature::IAMD, .max_size = 20};
  for (int i = 0; i < 200; ++i) {
    Term t = gen.term(cfg);
    expect_fraction_matches(t, split_inverse(t), 1000 + i, 5);
  }
}

TEST(NormalizeProperties, PolyNormalIsHomomorphic) {
  testing::TermGen gen(45);
  testing::GenConfig cfg{.sig = Signature::IAMD, .max_size = 12};
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Term t1 = gen.term(cfg);
    Term t2 = gen.term(cfg);
    if (contains_op(t1, Op::Inv) || contains_op(t2, Op::Inv)) continue;
    PosPoly p1 = poly_normal(t1);
    PosPoly p2 = poly_normal(t2);
    EXPECT_EQ(poly_normal(Term::add(t1, t2)), p1.plus(p2));
    EXPECT_EQ(poly_normal(Term::mul(t1, t2)), p1.times(p2));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(NormalizeProperties, InverseIdentities) {
  testing::TermGen gen(46);
  testing::GenConfig cfg{.sig = Signature::IAMD, .max_size = 15};
  for (int i = 0; i < 300; ++i) {
    Term s = gen.term(cfg);
    Term t = gen.term(cfg);
    EXPECT_EQ(split_inverse(Term::inv(Term::inv(t))), split_inverse(t));
    EXPECT_EQ(split_inverse(Term::inv(Term::mul(s, t))), split_inverse(Term::mul(Term::inv(s), Term::inv(t))));
  }
}

TEST(NormalizeProperties, NumeralArithmetic) {
  for (std::uint64_t n = 1; n <= 50; ++n) {
    for (std::uint64_t m = 1; m <= 50; ++m) {
      Term a = numeral(n, Signature::IAMD);
      Term b = numeral(m, Signature::IAMD);
      ASSERT_EQ(poly_normal(Term::add(a, b)), poly_normal(numeral(n + m, Signature::IAMD)));
      ASSERT_EQ(poly_normal(Term::mul(a, b)), poly_normal(numeral(n * m, Signature::IAMD)));
    }
  }
}

TEST(NormalizeProperties, ZeroElimYieldsIamdTerm) {
  testing::TermGen gen(47);
  testing::GenConfig cfg{.sig = Signature::IAMDZ, .max_size = 25};
  for (int i = 0; i < 500; ++i) {
    Term t = gen.term(cfg);
    ZeroElim z = zero_elim(t);
    Assignment env = gen.assignment(cfg.vars, Carrier::NonNegativeRationals);
    Rational v = eval_total(t, env, Carrier::NonNegativeRationals);
    if (const Term* r = std::get_if<Term>(&z)) {
      EXPECT_FALSE(contains_op(*r, Op::Zero));
      EXPECT_TRUE(conforms(*r, Signature::IAMD));
      EXPECT_EQ(eval_total(*r, env, Carrier::NonNegativeRationals), v) << print(t);
    } else {
      EXPECT_TRUE(v.is_zero()) << print(t);
    }
  }
}

}  // namespace
}  // namespace meadow
