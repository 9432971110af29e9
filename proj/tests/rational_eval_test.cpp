#include <gtest/gtest.h>

#include "meadow/error.hpp"
#include "meadow/eval.hpp"
#include "meadow/rational.hpp"
#include "meadow/syntax.hpp"
#include "support/term_gen.hpp"

namespace meadow {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

TEST(Rational, LowestTerms) {
  Rational q(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(q.to_string(), "-3/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
}

TEST(Rational, ZeroTotalizedInverse) {
  EXPECT_EQ(Rational(0).inverse(), Rational(0));
  EXPECT_EQ(Rational::parse("-2/3").inverse(), Rational::parse("-3/2"));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("5/7"), Rational(mpz_class(5), mpz_class(7)));
  EXPECT_EQ(Rational::parse("-12"), Rational(-12));
  EXPECT_EQ(Rational::parse("4/6"), Rational::parse("2/3"));
  EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
  for (const char* bad : {"", "1/0", "x", "1/", "/2", "1.5", "--1", "1/-2"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
}

TEST(Assignment, ParseAndCarrier) {
  Assignment env = parse_assignment("x=1/2,y=3", Carrier::PositiveRationals);
  EXPECT_EQ(env.at("x"), Rational::parse("1/2"));
  EXPECT_EQ(env.at("y"), Rational(3));
  EXPECT_EQ(code_of([] { parse_assignment("x=-1", Carrier::NonNegativeRationals); }), Errc::CarrierViolation);
  EXPECT_EQ(code_of([] { parse_assignment("x=0", Carrier::PositiveRationals); }), Errc::CarrierViolation);
  EXPECT_NO_THROW(parse_assignment("x=-1", Carrier::AllRationals));
  EXPECT_TRUE(parse_assignment("", Carrier::AllRationals).empty());
  EXPECT_THROW(parse_assignment("x", Carrier::AllRationals), Error);
  EXPECT_THROW(parse_assignment("X=1", Carrier::AllRationals), Error);
  EXPECT_EQ(format_assignment(env), "x=1/2,y=3");
}

TEST(Assignment, SamplesStayInCarrier) {
  std::mt19937_64 rng(3);
  for (Carrier c : {Carrier::PositiveRationals, Carrier::NonNegativeRationals, Carrier::AllRationals}) {
    for (int i = 0; i < 500; ++i) EXPECT_TRUE(carrier_contains(c, sample_rational(rng, c)));
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval_total(Term::inv(Term::zero()), {}, Carrier::NonNegativeRationals), Rational(0));
  EXPECT_EQ(eval_total(Term::div(numeral(3, Signature::DMD), Term::zero()), {}, Carrier::AllRationals),
            Rational(0));
  Term x = Term::var("x");
  EXPECT_EQ(eval_total(Term::mul(x, Term::inv(x)), {{"x", Rational::parse("5/7")}}, Carrier::PositiveRationals),
            Rational(1));
}

TEST(Eval, CarrierRestrictions) {
  EXPECT_EQ(code_of([] { eval_total(Term::zero(), {}, Carrier::PositiveRationals); }), Errc::CarrierViolation);
  EXPECT_EQ(code_of([] { eval_total(Term::neg(Term::one()), {}, Carrier::NonNegativeRationals); }),
            Errc::CarrierViolation);
  EXPECT_EQ(code_of([] { eval_total(Term::var("x"), {{"x", Rational(0)}}, Carrier::PositiveRationals); }),
            Errc::CarrierViolation);
  EXPECT_EQ(code_of([] { eval_total(Term::var("x"), {}, Carrier::AllRationals); }), Errc::UnboundVariable);
}

TEST(Eval, DivisionIsMultiplicationByInverse) {
  Term t = parse_term("x / y");
  for (const char* e : {"x=3,y=0", "x=0,y=0", "x=2,y=5", "x=-1/2,y=-3"}) {
    Assignment env = parse_assignment(e, Carrier::AllRationals);
    EXPECT_EQ(eval_total(t, env, Carrier::AllRationals), env["x"] * env["y"].inverse()) << e;
  }
}

// Compositionality: the value of a node is the rational operation applied to
// the values of its children, checked on random full-meadow terms.
Rational combine(const Term& t, const Assignment& env) {
  auto ev = [&](const Term& s) { return eval_total(s, env, Carrier::AllRationals); };
  switch (t.op()) {
    case Op::Zero: return Rational(0);
    case Op::One: return Rational(1);
    case Op::Var: return env.at(t.name());
    case Op::Add: return ev(t.lhs()) + ev(t.rhs());
    case Op::Mul: return ev(t.lhs()) * ev(t.rhs());
    case Op::Neg: return -ev(t.arg());
    case Op::Inv: return ev(t.arg()).inverse();
    case Op::Div: return ev(t.lhs()) * ev(t.rhs()).inverse();
  }
  return Rational(0);
}

class EvalProperties : public ::testing::TestWithParam<Signature> {};

TEST_P(EvalProperties, Compositional) {
  testing::TermGen gen(21);
  testing::GenConfig cfg{.sig = GetParam(), .max_size = 25};
  for (int i = 0; i < 300; ++i) {
    Term t = gen.term(cfg);
    Assignment env = gen.assignment(cfg.vars, Carrier::AllRationals);
    EXPECT_EQ(eval_total(t, env, Carrier::AllRationals), combine(t, env)) << print(t);
  }
}

INSTANTIATE_TEST_SUITE_P(FullMeadows, EvalProperties, ::testing::Values(Signature::IMD, Signature::DMD),
                         [](const auto& info) { return std::string(signature_name(info.param)); });

TEST(EvalProperties, NonNegativeCarrierClosed) {
  testing::TermGen gen(22);
  testing::GenConfig cfg{.sig = Signature::IAMDZ, .max_size = 25};
  for (int i = 0; i < 300; ++i) {
    Term t = gen.term(cfg);
    Rational v = eval_total(t, gen.assignment(cfg.vars, Carrier::NonNegativeRationals),
                            Carrier::NonNegativeRationals);
    EXPECT_GE(v.sign(), 0);
  }
}

}  // namespace
}  // namespace meadow
