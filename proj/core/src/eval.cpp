#include "meadow/eval.hpp"

#include "meadow/error.hpp"

namespace meadow {

namespace {

Rational eval_rec(const Term& t, const Assignment& env, Carrier carrier) {
  switch (t.op()) {
    case Op::Zero:
      if (carrier == Carrier::PositiveRationals) {
        throw Error(Errc::CarrierViolation, "constant 0 outside the positive rationals");
      }
      return Rational(0);
    case Op::One:
      return Rational(1);
    case Op::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw Error(Errc::UnboundVariable, "no value for '" + t.name() + "'");
      return it->second;
    }
    case Op::Add:
      return eval_rec(t.lhs(), env, carrier) + eval_rec(t.rhs(), env, carrier);
    case Op::Mul:
      return eval_rec(t.lhs(), env, carrier) * eval_rec(t.rhs(), env, carrier);
    case Op::Neg:
      if (carrier != Carrier::AllRationals) {
        throw Error(Errc::CarrierViolation, "additive inverse needs the carrier of all rationals");
      }
      return -eval_rec(t.arg(), env, carrier);
    case Op::Inv:
      return eval_rec(t.arg(), env, carrier).inverse();
    case Op::Div:
      return eval_rec(t.lhs(), env, carrier) * eval_rec(t.rhs(), env, carrier).inverse();
  }
  throw Error(Errc::InvalidArgument, "unknown term constructor");
}

}  // namespace

void require_in_carrier(const Assignment& env, Carrier carrier) {
  for (const auto& [name, value] : env) {
    if (!carrier_contains(carrier, value)) {
      throw Error(Errc::CarrierViolation, name + " = " + value.to_string() +
                                              " lies outside carrier " +
                                              std::string(carrier_name(carrier)));
    }
  }
}

Rational eval_total(const Term& t, const Assignment& env, Carrier carrier) {
  require_in_carrier(env, carrier);
  return eval_rec(t, env, carrier);
}

}  // namespace meadow
