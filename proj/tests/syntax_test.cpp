#include <gtest/gtest.h>

#include "meadow/error.hpp"
#include "meadow/syntax.hpp"
#include "support/term_gen.hpp"

namespace meadow {
namespace {

const Term kOne = Term::one();
const Term kZero = Term::zero();
const Term kX = Term::var("x");
const Term kY = Term::var("y");

TEST(Parse, Examples) {
  EXPECT_EQ(parse_term("x * x^-1"), Term::mul(kX, Term::inv(kX)));
  Term q = Term::add(Term::add(kOne, power(kX, 2)), power(kY, 2));
  EXPECT_EQ(parse_term("(1 + x^2 + y^2) * (1 + x^2 + y^2)^-1"), Term::mul(q, Term::inv(q)));
  EXPECT_EQ(parse_term("3 / 0"), Term::div(numeral(3, Signature::DAMDZ), kZero));
}

TEST(Parse, Precedence) {
  EXPECT_EQ(parse_term("x + y * x"), Term::add(kX, Term::mul(kY, kX)));
  EXPECT_EQ(parse_term("x / y / x"), Term::div(Term::div(kX, kY), kX));
  EXPECT_EQ(parse_term("x / y * x"), Term::mul(Term::div(kX, kY), kX));
  EXPECT_EQ(parse_term("-x^-1"), Term::neg(Term::inv(kX)));
  EXPECT_EQ(parse_term("-x * y"), Term::mul(Term::neg(kX), kY));
  EXPECT_EQ(parse_term("x^-1^-1"), Term::inv(Term::inv(kX)));
  EXPECT_EQ(parse_term("inv(x + y)"), Term::inv(Term::add(kX, kY)));
  EXPECT_EQ(parse_term("x + y + x"), Term::add(Term::add(kX, kY), kX));
  EXPECT_EQ(parse_term("x^0"), kOne);
  EXPECT_EQ(parse_term("inv"), Term::var("inv"));
}

TEST(Parse, Span) {
  ParsedInput p = parse("\n  x + y  ");
  EXPECT_EQ(p.span.line, 2u);
  EXPECT_EQ(p.span.column, 3u);
  EXPECT_EQ(p.span.length, 5u);
}

TEST(Parse, Errors) {
  struct Case {
    const char* text;
    std::size_t line, column;
  };
  for (Case c : {Case{"", 1, 1}, Case{"x +", 1, 4}, Case{"x - y", 1, 3}, Case{"(x", 1, 3}, Case{"x)", 1, 2},
                 Case{"x ^ -2", 1, 6}, Case{"X", 1, 1}, Case{"x\n  & y", 2, 3}, Case{"99999", 1, 1},
                 Case{"x^", 1, 3}, Case{"x y", 1, 3}}) {
    try {
      parse_term(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.code(), Errc::SyntaxError);
      EXPECT_EQ(e.line(), c.line) << c.text;
      EXPECT_EQ(e.column(), c.column) << c.text;
    }
  }
}

TEST(Parse, DeepNestingIsRejected) {
  std::string deep(5000, '(');
  deep += "x";
  deep += std::string(5000, ')');
  EXPECT_THROW(parse_term(deep), SyntaxError);
  std::string ok(500, '(');
  ok += "x";
  ok += std::string(500, ')');
  EXPECT_EQ(parse_term(ok), kX);
}

TEST(Print, Examples) {
  Term t = Term::mul(Term::add(kOne, kOne), Term::inv(kX));
  EXPECT_EQ(print(t), "2 * x^-1");
  EXPECT_EQ(print(t, {.numerals = NumeralStyle::Structural}), "(1 + 1) * x^-1");
  EXPECT_EQ(print(kZero), "0");
  EXPECT_EQ(print(Term::div(kX, Term::add(kY, kOne))), "x / (y + 1)");
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(print(parse_term("x + (y + x)")), "x + (y + x)");
  EXPECT_EQ(print(parse_term("(x + y) + x")), "x + y + x");
  EXPECT_EQ(print(parse_term("x / (y / x)")), "x / (y / x)");
  EXPECT_EQ(print(parse_term("x * (y * x)")), "x * (y * x)");
  EXPECT_EQ(print(parse_term("(-x)^-1")), "(-x)^-1");
  EXPECT_EQ(print(parse_term("-(x * y)")), "-(x * y)");
  EXPECT_EQ(print(parse_term("x * -y")), "x * -y");
  EXPECT_EQ(print(parse_term("(x + 1)^3")), "(x + 1)^3");
  EXPECT_EQ(print(parse_term("(x^2)^3")), "x^2^3");
  EXPECT_EQ(print(parse_term("(1 + 1) + 1")), "3");
  EXPECT_EQ(print(parse_term("1 + (1 + 1)")), "1 + 2");
}

// Properties.

class RoundTrip : public ::testing::TestWithParam<Signature> {};

TEST_P(RoundTrip, ParsePrintIsIdentity) {
  testing::TermGen gen(81);
  testing::GenConfig cfg{.sig = GetParam(), .max_size = 30, .max_numeral = 6};
  for (int i = 0; i < 2000; ++i) {
    Term t = gen.term(cfg);
    std::string text = print(t);
    ASSERT_EQ(parse_term(text), t) << text;
    ASSERT_EQ(parse_term(print(t, {.numerals = NumeralStyle::Structural})), t) << text;
  }
}

TEST_P(RoundTrip, PrintedTokensStayInGrammar) {
  testing::TermGen gen(82);
  testing::GenConfig cfg{.sig = GetParam(), .max_size = 30};
  for (int i = 0; i < 500; ++i) {
    std::string text = print(gen.term(cfg));
    for (char c : text) {
      bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
                std::string_view(" +*/-^()").find(c) != std::string_view::npos;
      ASSERT_TRUE(ok) << text;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllSignatures, RoundTrip,
                         ::testing::Values(Signature::CR, Signature::IMD, Signature::DMD, Signature::IAMDZ,
                                           Signature::DAMDZ, Signature::IAMD, Signature::DAMD),
                         [](const auto& info) { return std::string(signature_name(info.param)); });

}  // namespace
}  // namespace meadow
