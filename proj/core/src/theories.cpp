#include "meadow/theories.hpp"

#include <map>
#include <random>

#include "meadow/error.hpp"
#include "meadow/eval.hpp"
#include "meadow/syntax.hpp"

namespace meadow {

namespace {

Equation eq(std::string_view lhs, std::string_view rhs) { return {parse_term(lhs), parse_term(rhs)}; }

// Table order: additive laws, then multiplicative laws.
std::vector<Equation> commutative_ring() {
  return {
      eq("(x + y) + z", "x + (y + z)"),
      eq("x + y", "y + x"),
      eq("x + 0", "x"),
      eq("x + -x", "0"),
      eq("(x * y) * z", "x * (y * z)"),
      eq("x * y", "y * x"),
      eq("x * 1", "x"),
      eq("x * (y + z)", "x * y + x * z"),
  };
}

std::vector<Equation> without(std::vector<Equation> eqs, const Equation& drop) {
  std::erase(eqs, drop);
  return eqs;
}

std::vector<Equation> with(std::vector<Equation> eqs, std::initializer_list<Equation> extra) {
  eqs.insert(eqs.end(), extra.begin(), extra.end());
  return eqs;
}

std::map<TheoryId, Theory> build_catalog() {
  const auto cr = commutative_ring();
  const auto acrz = without(cr, eq("x + -x", "0"));
  const auto acr = without(acrz, eq("x + 0", "x"));

  const std::initializer_list<Equation> inv_zero = {eq("(x^-1)^-1", "x"), eq("x * (x * x^-1)", "x")};
  const std::initializer_list<Equation> div_zero = {
      eq("1 / (1 / x)", "x"), eq("(x * x) / x", "x"), eq("x / y", "x * (1 / y)")};

  const auto iamdz = with(acrz, inv_zero);
  const auto damdz = with(acrz, div_zero);
  const auto imd = with(cr, inv_zero);
  const auto dmd = with(cr, div_zero);

  const Equation rat_inv = eq("(1 + x^2 + y^2) * (1 + x^2 + y^2)^-1", "1");
  const Equation rat_div = eq("(1 + x^2 + y^2) / (1 + x^2 + y^2)", "1");
  const Equation alt_inv = eq("(x * (x + y)) * (x * (x + y))^-1", "x * x^-1");
  const Equation alt_div = eq("(x * (x + y)) / (x * (x + y))", "x / x");

  const ConditionalLaw gil_inv{parse_term("x"), eq("x * x^-1", "1")};
  const ConditionalLaw gil_div{parse_term("x"), eq("x / x", "1")};

  std::map<TheoryId, Theory> c;
  auto put = [&c](TheoryId id, Signature sig, std::vector<Equation> eqs,
                  std::optional<ConditionalLaw> cond = std::nullopt) {
    c.emplace(id, Theory{id, sig, std::move(eqs), std::move(cond)});
  };
  put(TheoryId::E_CR, Signature::CR, cr);
  put(TheoryId::E_ACRZ, Signature::IAMDZ, acrz);
  put(TheoryId::E_ACR, Signature::IAMD, acr);
  put(TheoryId::E_IAMD, Signature::IAMD, with(acr, {eq("x * x^-1", "1")}));
  put(TheoryId::E_DAMD, Signature::DAMD, with(acr, {eq("x / x", "1")}));
  put(TheoryId::E_IAMDZ, Signature::IAMDZ, iamdz);
  put(TheoryId::E_DAMDZ, Signature::DAMDZ, damdz);
  put(TheoryId::E_IMD, Signature::IMD, imd);
  put(TheoryId::E_DMD, Signature::DMD, dmd);
  put(TheoryId::RATZI_SPEC, Signature::IMD, with(imd, {rat_inv}));
  put(TheoryId::RATZD_SPEC, Signature::DMD, with(dmd, {rat_div}));
  put(TheoryId::RATIAZ_SPEC, Signature::IAMDZ, with(iamdz, {rat_inv}));
  put(TheoryId::RATDAZ_SPEC, Signature::DAMDZ, with(damdz, {rat_div}));
  put(TheoryId::RATIAZ_ALT_SPEC, Signature::IAMDZ, with(iamdz, {alt_inv}));
  put(TheoryId::RATIAZ_GIL, Signature::IAMDZ, with(iamdz, {alt_inv}), gil_inv);
  put(TheoryId::RATDAZ_ALT_SPEC, Signature::DAMDZ, with(damdz, {alt_div}));
  put(TheoryId::RATDAZ_GIL, Signature::DAMDZ, with(damdz, {alt_div}), gil_div);
  return c;
}

const std::map<TheoryId, Theory>& catalog() {
  static const std::map<TheoryId, Theory> c = build_catalog();
  return c;
}

void collect_ops(const Term& t, std::set<Op>& out) {
  if (t.op() != Op::Var) out.insert(t.op());
  if (t.is_unary()) collect_ops(t.arg(), out);
  if (t.is_binary()) {
    collect_ops(t.lhs(), out);
    collect_ops(t.rhs(), out);
  }
}

Assignment sample_assignment(const std::set<std::string>& vars, Carrier carrier, std::mt19937_64& rng) {
  Assignment env;
  for (const auto& v : vars) env[v] = sample_rational(rng, carrier);
  return env;
}

}  // namespace

const std::vector<TheoryId>& all_theories() {
  static const std::vector<TheoryId> ids = {
      TheoryId::E_CR,        TheoryId::E_ACRZ,          TheoryId::E_ACR,       TheoryId::E_IAMD,
      TheoryId::E_DAMD,      TheoryId::E_IAMDZ,         TheoryId::E_DAMDZ,     TheoryId::E_IMD,
      TheoryId::E_DMD,       TheoryId::RATZI_SPEC,      TheoryId::RATZD_SPEC,  TheoryId::RATIAZ_SPEC,
      TheoryId::RATDAZ_SPEC, TheoryId::RATIAZ_ALT_SPEC, TheoryId::RATIAZ_GIL,  TheoryId::RATDAZ_ALT_SPEC,
      TheoryId::RATDAZ_GIL};
  return ids;
}

std::string_view theory_name(TheoryId id) noexcept {
  switch (id) {
    case TheoryId::E_CR: return "cr";
    case TheoryId::E_ACRZ: return "acrz";
    case TheoryId::E_ACR: return "acr";
    case TheoryId::E_IAMD: return "iamd";
    case TheoryId::E_DAMD: return "damd";
    case TheoryId::E_IAMDZ: return "iamdz";
    case TheoryId::E_DAMDZ: return "damdz";
    case TheoryId::E_IMD: return "imd";
    case TheoryId::E_DMD: return "dmd";
    case TheoryId::RATZI_SPEC: return "ratzi";
    case TheoryId::RATZD_SPEC: return "ratzd";
    case TheoryId::RATIAZ_SPEC: return "ratiaz";
    case TheoryId::RATDAZ_SPEC: return "ratdaz";
    case TheoryId::RATIAZ_ALT_SPEC: return "ratiaz-alt";
    case TheoryId::RATIAZ_GIL: return "ratiaz-gil";
    case TheoryId::RATDAZ_ALT_SPEC: return "ratdaz-alt";
    case TheoryId::RATDAZ_GIL: return "ratdaz-gil";
  }
  return "?";
}

std::optional<TheoryId> theory_from_name(std::string_view name) noexcept {
  for (TheoryId id : all_theories()) {
    if (theory_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string Equation::to_string() const { return print(lhs) + " = " + print(rhs); }

std::string ConditionalLaw::to_string() const {
  return print(guard) + " != 0 => " + conclusion.to_string();
}

const Theory& theory(TheoryId id) { return catalog().at(id); }

const std::vector<Equation>& axioms(TheoryId id) { return theory(id).equations; }

std::set<Op> operations_used(TheoryId id) {
  std::set<Op> ops;
  const Theory& th = theory(id);
  for (const auto& e : th.equations) {
    collect_ops(e.lhs, ops);
    collect_ops(e.rhs, ops);
  }
  if (th.conditional) {
    collect_ops(th.conditional->guard, ops);
    collect_ops(th.conditional->conclusion.lhs, ops);
    collect_ops(th.conditional->conclusion.rhs, ops);
    ops.insert(Op::Zero);
  }
  return ops;
}

Interpretation positive_rationals() {
  return {"positive rationals", Carrier::PositiveRationals, {Op::One, Op::Add, Op::Mul, Op::Inv, Op::Div}};
}

Interpretation nonnegative_rationals() {
  return {"non-negative rationals (zero-totalized)",
          Carrier::NonNegativeRationals,
          {Op::Zero, Op::One, Op::Add, Op::Mul, Op::Inv, Op::Div}};
}

Interpretation all_rationals() {
  return {"rationals (zero-totalized)",
          Carrier::AllRationals,
          {Op::Zero, Op::One, Op::Add, Op::Mul, Op::Neg, Op::Inv, Op::Div}};
}

bool ModelReport::all_passed() const {
  for (const auto& l : laws) {
    if (!l.passed) return false;
  }
  return true;
}

ModelReport check_model(TheoryId id, const Interpretation& interp, std::size_t samples,
                        std::uint64_t seed) {
  for (Op op : operations_used(id)) {
    if (!interp.operations.contains(op)) {
      throw Error(Errc::SignatureMismatch, "interpretation '" + interp.name + "' lacks operator '" +
                                               std::string(op_name(op)) + "' used by theory " +
                                               std::string(theory_name(id)));
    }
  }
  std::mt19937_64 rng(seed);
  ModelReport report;
  const Theory& th = theory(id);
  for (const auto& e : th.equations) {
    LawReport lr;
    lr.law = e.to_string();
    auto vars = free_vars(e.lhs);
    vars.merge(free_vars(e.rhs));
    for (std::size_t k = 0; k < samples; ++k) {
      Assignment env = sample_assignment(vars, interp.carrier, rng);
      Rational l = eval_total(e.lhs, env, interp.carrier);
      Rational r = eval_total(e.rhs, env, interp.carrier);
      ++lr.checked;
      if (l != r && lr.passed) {
        lr.passed = false;
        lr.witness = env;
        lr.lhs_value = l;
        lr.rhs_value = r;
      }
    }
    report.laws.push_back(std::move(lr));
  }
  if (th.conditional) {
    const ConditionalLaw& law = *th.conditional;
    LawReport lr;
    lr.law = law.to_string();
    auto vars = free_vars(law.guard);
    vars.merge(free_vars(law.conclusion.lhs));
    vars.merge(free_vars(law.conclusion.rhs));
    for (std::size_t k = 0; k < samples; ++k) {
      Assignment env = sample_assignment(vars, interp.carrier, rng);
      if (eval_total(law.guard, env, interp.carrier).is_zero()) continue;
      Rational l = eval_total(law.conclusion.lhs, env, interp.carrier);
      Rational r = eval_total(law.conclusion.rhs, env, interp.carrier);
      ++lr.checked;
      if (l != r && lr.passed) {
        lr.passed = false;
        lr.witness = env;
        lr.lhs_value = l;
        lr.rhs_value = r;
      }
    }
    report.laws.push_back(std::move(lr));
  }
  return report;
}

}  // namespace meadow
