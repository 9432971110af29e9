#include "meadow/syntax.hpp"

namespace meadow {

namespace {

// Binding strength; a child printed below the required level gets parentheses.
enum Level : int { kSum = 1, kProduct = 2, kPrefix = 3, kPostfix = 4, kAtom = 5 };

class Printer {
 public:
  explicit Printer(const PrintOptions& opts) : opts_(opts) {}

  void emit(const Term& t, int min_level) {
    bool parens = level(t) < min_level;
    if (parens) out_ += '(';
    body(t);
    if (parens) out_ += ')';
  }

  std::string take() { return std::move(out_); }

 private:
  bool decimal() const { return opts_.numerals == NumeralStyle::Decimal; }

  int level(const Term& t) const {
    if (decimal()) {
      if (numeral_value(t)) return kAtom;
      if (power_view(t)) return kPostfix;
    }
    switch (t.op()) {
      case Op::Add: return kSum;
      case Op::Mul:
      case Op::Div: return kProduct;
      case Op::Neg: return kPrefix;
      case Op::Inv: return kPostfix;
      default: return kAtom;
    }
  }

  void body(const Term& t) {
    if (decimal()) {
      if (auto n = numeral_value(t)) {
        out_ += std::to_string(*n);
        return;
      }
      if (auto pv = power_view(t)) {
        emit(pv->first, kPostfix);
        out_ += '^';
        out_ += std::to_string(pv->second);
        return;
      }
    }
    switch (t.op()) {
      case Op::Zero: out_ += '0'; return;
      case Op::One: out_ += '1'; return;
      case Op::Var: out_ += t.name(); return;
      case Op::Add:
        emit(t.lhs(), kSum);
        out_ += " + ";
        emit(t.rhs(), kProduct);
        return;
      case Op::Mul:
      case Op::Div:
        emit(t.lhs(), kProduct);
        out_ += t.op() == Op::Mul ? " * " : " / ";
        emit(t.rhs(), kPrefix);
        return;
      case Op::Neg:
        out_ += '-';
        emit(t.arg(), kPrefix);
        return;
      case Op::Inv:
        emit(t.arg(), kPostfix);
        out_ += "^-1";
        return;
    }
  }

  const PrintOptions& opts_;
  std::string out_;
};

}  // namespace

std::string print(const Term& t, const PrintOptions& opts) {
  Printer p(opts);
  p.emit(t, kSum);
  return p.take();
}

}  // namespace meadow
