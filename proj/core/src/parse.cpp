#include <cctype>
#include <optional>
#include <vector>

#include "meadow/error.hpp"
#include "meadow/syntax.hpp"

namespace meadow {

namespace {

enum class Tok { Nat, Ident, Plus, Star, Slash, Minus, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  std::size_t line;
  std::size_t column;
};

constexpr std::size_t kMaxNesting = 2000;

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto single = [&](Tok kind) {
    out.push_back({kind, std::string(1, src[i]), i, line, col});
    ++i;
    ++col;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Nat, std::string(src.substr(start, i - start)), start, line, col});
      col += i - start;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = i;
      while (i < src.size() && ((src[i] >= 'a' && src[i] <= 'z') ||
                                std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start, line, col});
      col += i - start;
      continue;
    }
    switch (c) {
      case '+': single(Tok::Plus); continue;
      case '*': single(Tok::Star); continue;
      case '/': single(Tok::Slash); continue;
      case '-': single(Tok::Minus); continue;
      case '^': single(Tok::Caret); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      default:
        throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", src.size(), line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Term parse_all() {
    if (peek().kind == Tok::End) fail(peek(), "empty expression");
    Term t = expr();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& tok, const std::string& msg) const {
    throw SyntaxError(tok.line, tok.column, msg);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + what +
                       (peek().kind == Tok::End ? " at end of input" : ", got '" + peek().text + "'"));
    }
    ++pos_;
  }

  std::uint64_t natural(const Token& tok) const {
    // Leading zeros are accepted; the length check keeps stoull in range.
    std::size_t first = tok.text.find_first_not_of('0');
    std::string_view digits =
        first == std::string::npos ? std::string_view("0") : std::string_view(tok.text).substr(first);
    if (digits.size() > 6 || std::stoull(std::string(digits)) > kMaxNumeral) {
      fail(tok, "literal " + tok.text + " exceeds the limit " + std::to_string(kMaxNumeral));
    }
    return std::stoull(std::string(digits));
  }

  Term expr() {
    Term t = product();
    while (peek().kind == Tok::Plus) {
      ++pos_;
      t = Term::add(t, product());
    }
    return t;
  }

  Term product() {
    Term t = prefix();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool is_div = next().kind == Tok::Slash;
      Term r = prefix();
      t = is_div ? Term::div(t, r) : Term::mul(t, r);
    }
    return t;
  }

  Term prefix() {
    if (peek().kind == Tok::Minus) {
      const Token& tok = next();
      Guard g(*this, tok);
      return Term::neg(prefix());
    }
    return postfix();
  }

  Term postfix() {
    Term t = primary();
    while (peek().kind == Tok::Caret) {
      ++pos_;
      if (peek().kind == Tok::Minus) {
        ++pos_;
        const Token& tok = peek();
        if (tok.kind != Tok::Nat || natural(tok) != 1) fail(tok, "only ^-1 is allowed as a negative exponent");
        ++pos_;
        t = Term::inv(t);
      } else if (peek().kind == Tok::Nat) {
        t = power(t, natural(next()));
      } else {
        fail(peek(), "expected exponent after '^'");
      }
    }
    return t;
  }

  Term primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Nat: {
        ++pos_;
        std::uint64_t n = natural(tok);
        return n == 0 ? Term::zero() : numeral(n, Signature::CR);
      }
      case Tok::Ident: {
        ++pos_;
        if (tok.text == "inv" && peek().kind == Tok::LParen) {
          ++pos_;
          Guard g(*this, tok);
          Term inner = expr();
          expect(Tok::RParen, "')'");
          return Term::inv(inner);
        }
        return Term::var(tok.text);
      }
      case Tok::LParen: {
        ++pos_;
        Guard g(*this, tok);
        Term inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End:
        fail(tok, "unexpected end of input");
      default:
        fail(tok, "unexpected '" + tok.text + "'");
    }
  }

  struct Guard {
    Guard(Parser& p, const Token& tok) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail(tok, "expression nested too deeply");
    }
    ~Guard() { --parser.depth_; }
    Parser& parser;
  };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

ParsedInput parse(std::string_view text) {
  auto tokens = tokenize(text);
  SourceSpan span;
  if (!tokens.empty() && tokens.front().kind != Tok::End) {
    span.line = tokens.front().line;
    span.column = tokens.front().column;
    const Token& last = tokens[tokens.size() - 2];
    span.length = last.offset + last.text.size() - tokens.front().offset;
  }
  Parser p(std::move(tokens));
  return {p.parse_all(), span};
}

Term parse_term(std::string_view text) { return parse(text).term; }

}  // namespace meadow
