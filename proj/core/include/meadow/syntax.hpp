#pragma once

// Concrete syntax for terms.
//
// Grammar, lowest to highest precedence:
//
//   expr    := product ('+' product)*
//   product := prefix (('*' | '/') prefix)*          left-associative
//   prefix  := '-' prefix | postfix
//   postfix := primary ('^' ('-1' | NAT))*
//   primary := NAT | IDENT | 'inv' '(' expr ')' | '(' expr ')'
//
// NAT is a decimal literal expanded to the structural numeral; `^n` expands
// to the structural power p^n = ((1 * p) * p) ... ; `^-1` and `inv(t)` both
// denote the multiplicative inverse. IDENT matches [a-z][a-z0-9_]*.
// There is no binary subtraction.

#include <cstddef>
#include <string>
#include <string_view>

#include "meadow/term.hpp"

namespace meadow {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

struct ParsedInput {
  Term term;
  SourceSpan span;
};

/// Throws SyntaxError with a 1-based line and column.
ParsedInput parse(std::string_view text);

/// parse(text).term
Term parse_term(std::string_view text);

enum class NumeralStyle { Decimal, Structural };

struct PrintOptions {
  /// Decimal renders numerals as literals and powers as `p^n`; Structural
  /// spells both out.
  NumeralStyle numerals = NumeralStyle::Decimal;
};

/// Minimal-parenthesis rendering; parse(print(t)).term == t.
std::string print(const Term& t, const PrintOptions& opts = {});

}  // namespace meadow
