#include "meadow/partial.hpp"

#include "meadow/error.hpp"
#include "meadow/eval.hpp"

namespace meadow {

std::string_view punch_name(Punch p) noexcept {
  switch (p) {
    case Punch::Inv0: return "inv0";
    case Punch::DivAll0: return "divall0";
    case Punch::DivNonzero0: return "divnz0";
  }
  return "?";
}

std::optional<Punch> punch_from_name(std::string_view name) noexcept {
  for (auto p : {Punch::Inv0, Punch::DivAll0, Punch::DivNonzero0}) {
    if (punch_name(p) == name) return p;
  }
  return std::nullopt;
}

const Rational& PartialValue::value() const {
  if (!value_) throw Error(Errc::InvalidArgument, "value() of an undefined result");
  return *value_;
}

std::string PartialValue::to_string() const { return value_ ? value_->to_string() : "undefined"; }

namespace {

using Maybe = std::optional<Rational>;

Maybe punched(const Term& t, const Assignment& env, Punch punch) {
  switch (t.op()) {
    case Op::Zero:
      return Rational(0);
    case Op::One:
      return Rational(1);
    case Op::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw Error(Errc::UnboundVariable, "no value for '" + t.name() + "'");
      return it->second;
    }
    case Op::Add:
    case Op::Mul: {
      Maybe l = punched(t.lhs(), env, punch);
      Maybe r = punched(t.rhs(), env, punch);
      if (!l || !r) return std::nullopt;
      return t.op() == Op::Add ? *l + *r : *l * *r;
    }
    case Op::Inv: {
      Maybe a = punched(t.arg(), env, punch);
      if (!a || a->is_zero()) return std::nullopt;
      return a->inverse();
    }
    case Op::Div: {
      Maybe l = punched(t.lhs(), env, punch);
      Maybe r = punched(t.rhs(), env, punch);
      if (!l || !r) return std::nullopt;
      if (r->is_zero()) {
        if (punch == Punch::DivNonzero0 && l->is_zero()) return Rational(0);
        return std::nullopt;
      }
      return *l * r->inverse();
    }
    case Op::Neg:
      break;
  }
  throw Error(Errc::SignatureMismatch, "unexpected constructor in punched evaluation");
}

struct Membership {
  bool nz;
  bool def;
};

Membership classify(const Term& t, NzAdditionRule rule) {
  switch (t.op()) {
    case Op::One:
      return {true, true};
    case Op::Zero:
    case Op::Var:
      return {false, true};
    case Op::Add: {
      Membership l = classify(t.lhs(), rule);
      Membership r = classify(t.rhs(), rule);
      bool nz = rule == NzAdditionRule::Guarded ? (l.nz && r.def) || (r.nz && l.def) : (l.nz || r.nz);
      return {nz, nz || (l.def && r.def)};
    }
    case Op::Mul: {
      Membership l = classify(t.lhs(), rule);
      Membership r = classify(t.rhs(), rule);
      bool nz = l.nz && r.nz;
      return {nz, nz || (l.def && r.def)};
    }
    case Op::Inv: {
      Membership a = classify(t.arg(), rule);
      return {a.nz, a.nz};
    }
    default:
      throw Error(Errc::NotInSignature, "classify_def: constructor '" + std::string(op_name(t.op())) +
                                            "' is not in signature iamdz");
  }
}

}  // namespace

PartialValue eval_punched(const Term& t, const Assignment& env, Punch punch) {
  Signature sig = punch == Punch::Inv0 ? Signature::IAMDZ : Signature::DAMDZ;
  if (!conforms(t, sig)) {
    throw Error(Errc::SignatureMismatch, "punch " + std::string(punch_name(punch)) +
                                             " applies to " + std::string(signature_name(sig)) +
                                             " terms only");
  }
  require_in_carrier(env, Carrier::NonNegativeRationals);
  Maybe v = punched(t, env, punch);
  return v ? PartialValue::defined(*v) : PartialValue::undefined();
}

std::string_view def_class_name(DefClass c) noexcept {
  switch (c) {
    case DefClass::InNz: return "nz";
    case DefClass::InDefOnly: return "def";
    case DefClass::Outside: return "outside";
  }
  return "?";
}

DefClass classify_def(const Term& t, NzAdditionRule rule) {
  Membership m = classify(t, rule);
  if (m.nz) return DefClass::InNz;
  return m.def ? DefClass::InDefOnly : DefClass::Outside;
}

}  // namespace meadow
