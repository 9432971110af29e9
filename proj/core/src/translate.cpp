#include "meadow/translate.hpp"

#include "meadow/error.hpp"

namespace meadow {

namespace {

Term map_ops(const Term& t, Op from) {
  switch (t.op()) {
    case Op::Zero:
    case Op::One:
    case Op::Var:
      return t;
    case Op::Neg:
      return Term::neg(map_ops(t.arg(), from));
    case Op::Inv:
      if (from == Op::Inv) return Term::div(Term::one(), map_ops(t.arg(), from));
      return Term::inv(map_ops(t.arg(), from));
    case Op::Add:
      return Term::add(map_ops(t.lhs(), from), map_ops(t.rhs(), from));
    case Op::Mul:
      return Term::mul(map_ops(t.lhs(), from), map_ops(t.rhs(), from));
    case Op::Div:
      return Term::mul(map_ops(t.lhs(), from), Term::inv(map_ops(t.rhs(), from)));
  }
  return t;
}

}  // namespace

Term div_to_inv(const Term& t) {
  if (contains_op(t, Op::Inv)) {
    throw Error(Errc::MixedSignature, "div_to_inv: term already contains ^-1");
  }
  return map_ops(t, Op::Div);
}

Term inv_to_div(const Term& t) {
  if (contains_op(t, Op::Div)) {
    throw Error(Errc::MixedSignature, "inv_to_div: term already contains /");
  }
  return map_ops(t, Op::Inv);
}

Signature counterpart(Signature sig) noexcept {
  switch (sig) {
    case Signature::CR: return Signature::CR;
    case Signature::IMD: return Signature::DMD;
    case Signature::DMD: return Signature::IMD;
    case Signature::IAMDZ: return Signature::DAMDZ;
    case Signature::DAMDZ: return Signature::IAMDZ;
    case Signature::IAMD: return Signature::DAMD;
    case Signature::DAMD: return Signature::IAMD;
  }
  return sig;
}

}  // namespace meadow
