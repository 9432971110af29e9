#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "meadow/decide.hpp"
#include "meadow/error.hpp"
#include "meadow/eval.hpp"
#include "meadow/normalize.hpp"
#include "meadow/partial.hpp"
#include "meadow/serialize.hpp"
#include "meadow/syntax.hpp"
#include "meadow/translate.hpp"

namespace meadow::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kGrammar = R"(Expression grammar (lowest to highest precedence):
  a + b          addition
  a * b, a / b   multiplication and division, left-associative
  -a             additive inverse
  a^-1, a^n      inverse and natural powers (bind tighter than -)
  inv(a)         inverse, function form
  0, 1, 2, ...   numerals; x, y1, rate_2 variables ([a-z][a-z0-9_]*)
Expressions starting with '-' must follow '--'.)";

struct Globals {
  std::string format = "text";
  std::string numerals = "decimal";
  std::size_t max_monomials = 100000;
  std::uint64_t seed = 0;

  bool structured() const { return format == "structured"; }
  PrintOptions print_options() const {
    return {numerals == "structural" ? NumeralStyle::Structural : NumeralStyle::Decimal};
  }
};

json term_json(const Term& t) { return json::parse(serialize(t)); }

json rational_json(const Rational& q) { return q.to_string(); }

json assignment_json(const Assignment& env) {
  json j = json::object();
  for (const auto& [k, v] : env) j[k] = v.to_string();
  return j;
}

Signature parse_signature(const std::string& name) {
  auto sig = signature_from_name(name);
  if (!sig) throw Error(Errc::InvalidArgument, "unknown signature '" + name + "'");
  return *sig;
}

struct Outcome {
  int code = kOk;
  std::string text;
  json structured;
};

Outcome cmd_parse(const Globals& g, const std::string& expr, const std::string& sig_name) {
  Term t = parse_term(expr);
  if (!sig_name.empty()) require_conforms(t, parse_signature(sig_name), "parse");
  std::string printed = print(t, g.print_options());
  json j{{"text", printed}, {"term", term_json(t)}};
  if (!sig_name.empty()) j["signature"] = sig_name;
  return {kOk, printed, j};
}

Outcome normal_outcome(const ClosedNormal& c) {
  json j{{"kind", c.is_zero() ? "zero" : "fraction"}, {"normal", c.to_string()}};
  if (!c.is_zero()) {
    j["negative"] = c.negative();
    j["numerator"] = c.numerator().get_str();
    j["denominator"] = c.denominator().get_str();
  }
  return {kOk, c.to_string(), j};
}

Outcome fraction_outcome(const PolyFraction& f) {
  json j{{"kind", "poly_fraction"},
         {"normal", f.to_string()},
         {"numerator", f.numerator.to_string()},
         {"denominator", f.denominator.to_string()}};
  return {kOk, f.to_string(), j};
}

Outcome cmd_normalize(const Globals& g, const std::string& expr, const std::string& sig_name) {
  Signature sig = parse_signature(sig_name);
  Term t = parse_term(expr);
  require_conforms(t, sig, "normalize");
  NormalizeOptions opts{g.max_monomials};
  switch (sig) {
    case Signature::DAMD:
      t = div_to_inv(t);
      sig = Signature::IAMD;
      break;
    case Signature::DAMDZ:
      t = div_to_inv(t);
      sig = Signature::IAMDZ;
      break;
    case Signature::CR:
      sig = Signature::IMD;
      break;
    default:
      break;
  }
  const bool closed = is_closed(t);
  if (sig == Signature::IMD || sig == Signature::DMD) {
    if (!closed) {
      throw Error(Errc::InvalidArgument, "open terms over " + sig_name + " have no normal form");
    }
    return normal_outcome(closed_normal_full(t));
  }
  if (sig == Signature::IAMD) {
    if (closed) return normal_outcome(closed_normal_iamd(t, opts));
    return fraction_outcome(split_inverse(t, opts));
  }
  // iamdz
  if (closed) return normal_outcome(closed_normal_iamdz(t, opts));
  ZeroElim z = zero_elim(t);
  if (std::holds_alternative<ZeroResult>(z)) return normal_outcome(ClosedNormal::zero_form());
  return fraction_outcome(split_inverse(std::get<Term>(z), opts));
}

Outcome cmd_eval(const std::string& expr, const std::string& assign, const std::string& carrier_name,
                 const std::string& punch_name_arg) {
  Term t = parse_term(expr);
  if (!punch_name_arg.empty()) {
    auto punch = punch_from_name(punch_name_arg);
    if (!punch) throw Error(Errc::InvalidArgument, "unknown punch '" + punch_name_arg + "'");
    Assignment env = parse_assignment(assign, Carrier::NonNegativeRationals);
    PartialValue v = eval_punched(t, env, *punch);
    json j{{"defined", v.is_defined()}, {"punch", punch_name_arg}};
    if (v.is_defined()) j["value"] = rational_json(v.value());
    return {v.is_defined() ? kOk : kUndefined, v.to_string(), j};
  }
  auto carrier = carrier_from_name(carrier_name);
  if (!carrier) throw Error(Errc::InvalidArgument, "unknown carrier '" + carrier_name + "'");
  Assignment env = parse_assignment(assign, *carrier);
  Rational v = eval_total(t, env, *carrier);
  return {kOk, v.to_string(), json{{"defined", true}, {"value", rational_json(v)}, {"carrier", carrier_name}}};
}

Outcome decision_outcome(const Decision& d) {
  std::ostringstream text;
  text << (d.verdict ? "true" : "false");
  json j{{"verdict", d.verdict}};
  if (const auto* m = std::get_if<MatchedNormals>(&d.evidence)) {
    text << "\nnormals: " << m->lhs << (d.verdict ? " == " : " != ") << m->rhs;
    j["evidence"] = {{"kind", "normals"}, {"lhs", m->lhs}, {"rhs", m->rhs}};
  } else if (const auto* c = std::get_if<Counterexample>(&d.evidence)) {
    text << "\ncounterexample: " << (c->assignment.empty() ? "(closed)" : format_assignment(c->assignment))
         << " gives lhs = " << c->lhs_value.to_string() << ", rhs = " << c->rhs_value.to_string();
    j["evidence"] = {{"kind", "counterexample"},
                     {"assignment", assignment_json(c->assignment)},
                     {"carrier", std::string(carrier_name(c->carrier))},
                     {"lhs_value", rational_json(c->lhs_value)},
                     {"rhs_value", rational_json(c->rhs_value)}};
  } else if (const auto* r = std::get_if<RecursionTrace>(&d.evidence)) {
    json steps = json::array();
    for (const auto& s : r->steps) {
      text << "\n  " << s.goal << ": " << (s.verdict ? "true" : "false");
      steps.push_back({{"goal", s.goal}, {"verdict", s.verdict}});
    }
    j["evidence"] = {{"kind", "trace"}, {"steps", steps}};
  }
  return {d.verdict ? kOk : kVerdictFalse, text.str(), j};
}

Outcome cmd_decide(const Globals& g, const std::string& lhs, const std::string& rhs,
                   const std::string& theory_arg) {
  Term t = parse_term(lhs);
  Term u = parse_term(rhs);
  DecideOptions opts;
  opts.max_monomials = g.max_monomials;
  opts.seed = g.seed;
  Decision d;
  if (theory_arg.rfind("closed:", 0) == 0) {
    d = decide_closed(t, u, parse_signature(theory_arg.substr(7)));
  } else if (theory_arg == "iamd") {
    d = decide_iamd(t, u, opts);
  } else if (theory_arg == "damd") {
    d = decide_divisive(t, u, TheoryId::E_DAMD, opts);
  } else if (theory_arg == "ratiaz-gil") {
    d = decide_iamdz_gil(t, u, opts);
  } else if (theory_arg == "ratdaz-gil") {
    d = decide_divisive(t, u, TheoryId::RATDAZ_GIL, opts);
  } else {
    throw Error(Errc::UnsupportedTheory, "no decision procedure for '" + theory_arg + "'");
  }
  return decision_outcome(d);
}

Outcome cmd_defined(const std::string& expr, bool literal) {
  Term t = parse_term(expr);
  require_conforms(t, Signature::IAMDZ, "defined");
  DefClass c = classify_def(t, literal ? NzAdditionRule::Literal : NzAdditionRule::Guarded);
  std::string name(def_class_name(c));
  return {kOk, name, json{{"class", name}}};
}

Outcome cmd_translate(const Globals& g, const std::string& expr, const std::string& to) {
  Term t = parse_term(expr);
  Term r = to == "inv" ? div_to_inv(t) : inv_to_div(t);
  std::string printed = print(r, g.print_options());
  return {kOk, printed, json{{"text", printed}, {"term", term_json(r)}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetical meadow term toolkit", "meadow"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  Globals g;
  auto add_globals = [&g](CLI::App* sub) {
    sub->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--numerals", g.numerals, "Numeral rendering")
        ->check(CLI::IsMember({"decimal", "structural"}));
    sub->add_option("--max-monomials", g.max_monomials, "Polynomial size guardrail")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", g.seed, "Seed for counterexample sampling");
  };

  std::string expr, rhs, sig, assign, carrier = "all", punch, theory_arg, to;
  bool literal = false;

  auto* p_parse = app.add_subcommand("parse", "Check conformance and print canonically");
  p_parse->add_option("expr", expr)->required();
  p_parse->add_option("--sig", sig, "Signature to check against");

  auto* p_norm = app.add_subcommand("normalize", "Closed or open normal form");
  p_norm->add_option("expr", expr)->required();
  p_norm->add_option("--sig", sig)->required()->check(
      CLI::IsMember({"iamd", "iamdz", "imd", "dmd", "damd", "damdz", "cr"}));

  auto* p_eval = app.add_subcommand("eval", "Exact value, or undefined under a punch");
  p_eval->add_option("expr", expr)->required();
  p_eval->add_option("--assign", assign, "Assignment, e.g. x=1/2,y=3");
  p_eval->add_option("--carrier", carrier)->check(CLI::IsMember({"pos", "nonneg", "all"}));
  p_eval->add_option("--punch", punch)->check(CLI::IsMember({"inv0", "divall0", "divnz0"}));

  auto* p_decide = app.add_subcommand("decide", "Decide an equation");
  p_decide->add_option("lhs", expr)->required();
  p_decide->add_option("rhs", rhs)->required();
  p_decide->add_option("--theory", theory_arg, "iamd | damd | ratiaz-gil | ratdaz-gil | closed:SIG")
      ->required();

  auto* p_def = app.add_subcommand("defined", "Syntactic definedness: nz | def | outside");
  p_def->add_option("expr", expr)->required();
  p_def->add_flag("--literal-nz", literal, "Unguarded Nz addition rule");

  auto* p_tr = app.add_subcommand("translate", "Translate between inverse and division");
  p_tr->add_option("expr", expr)->required();
  p_tr->add_option("--to", to)->required()->check(CLI::IsMember({"inv", "div"}));

  for (auto* sub : {p_parse, p_norm, p_eval, p_decide, p_def, p_tr}) add_globals(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    Outcome o;
    if (*p_parse) {
      o = cmd_parse(g, expr, sig);
    } else if (*p_norm) {
      o = cmd_normalize(g, expr, sig);
    } else if (*p_eval) {
      o = cmd_eval(expr, assign, carrier, punch);
    } else if (*p_decide) {
      o = cmd_decide(g, expr, rhs, theory_arg);
    } else if (*p_def) {
      o = cmd_defined(expr, literal);
    } else {
      o = cmd_translate(g, expr, to);
    }
    if (g.structured()) {
      out << o.structured.dump() << '\n';
    } else {
      out << o.text << '\n';
    }
    return o.code;
  } catch (const Error& e) {
    if (g.structured()) {
      out << json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump() << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace meadow::cli
