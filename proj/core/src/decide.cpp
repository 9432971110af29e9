#include "meadow/decide.hpp"

#include <bit>
#include <optional>
#include <random>
#include <unordered_map>

#include "meadow/error.hpp"
#include "meadow/eval.hpp"
#include "meadow/normalize.hpp"
#include "meadow/syntax.hpp"
#include "meadow/translate.hpp"

namespace meadow {

namespace {

std::set<std::string> vars_of(const Term& t, const Term& u) {
  auto v = free_vars(t);
  v.merge(free_vars(u));
  return v;
}

std::optional<Counterexample> distinguishes(const Term& t, const Term& u, const Assignment& env,
                                            Carrier carrier) {
  Rational l = eval_total(t, env, carrier);
  Rational r = eval_total(u, env, carrier);
  if (l == r) return std::nullopt;
  return Counterexample{env, carrier, std::move(l), std::move(r)};
}

// Candidate order: all ones, then the staircase 1, 2, 3, ... over the sorted
// variables, then (non-negative carriers only) zero patterns, then
// pseudo-random rationals over a slowly widening range.
std::optional<Counterexample> search_counterexample(const Term& t, const Term& u, Carrier carrier,
                                                    const DecideOptions& opts) {
  const auto vars = vars_of(t, u);
  const std::vector<std::string> names(vars.begin(), vars.end());
  const std::size_t n = names.size();

  Assignment ones;
  for (const auto& v : names) ones[v] = Rational(1);
  if (auto c = distinguishes(t, u, ones, carrier)) return c;

  Assignment stair;
  for (std::size_t i = 0; i < n; ++i) stair[names[i]] = Rational(static_cast<long>(i + 1));
  if (auto c = distinguishes(t, u, stair, carrier)) return c;

  if (carrier != Carrier::PositiveRationals && n > 0) {
    // Subsets by increasing size; beyond 10 variables only singletons and
    // the full set.
    std::vector<std::vector<std::size_t>> patterns;
    if (n <= 10) {
      for (std::size_t size = 1; size <= n; ++size) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
          if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
          std::vector<std::size_t> idx;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) idx.push_back(i);
          }
          patterns.push_back(std::move(idx));
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) patterns.push_back({i});
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      patterns.push_back(std::move(all));
    }
    for (const auto& zeros : patterns) {
      Assignment env = ones;
      for (std::size_t i : zeros) env[names[i]] = Rational(0);
      if (auto c = distinguishes(t, u, env, carrier)) return c;
    }
  }

  std::mt19937_64 rng(opts.seed);
  const long lo = carrier == Carrier::PositiveRationals ? 1 : 0;
  for (std::size_t k = 0; k < opts.random_attempts; ++k) {
    std::uniform_int_distribution<long> num(lo, 10 + 8 * static_cast<long>(k));
    std::uniform_int_distribution<long> den(1, 1 + static_cast<long>(k) / 4);
    Assignment env;
    for (const auto& v : names) {
      long a = num(rng);
      if (carrier == Carrier::AllRationals && (rng() & 1)) a = -a;
      env[v] = Rational(mpz_class(a), mpz_class(den(rng)));
    }
    if (auto c = distinguishes(t, u, env, carrier)) return c;
  }
  return std::nullopt;
}

struct CrossNormals {
  PosPoly lhs;
  PosPoly rhs;
};

// t = t1 * t2^-1 and u = u1 * u2^-1, so t = u iff t1 * u2 = u1 * t2.
CrossNormals cross_normals(const Term& t, const Term& u, const DecideOptions& opts) {
  const std::size_t limit = opts.max_monomials;
  PolyFraction ft = split_inverse(t, {limit});
  PolyFraction fu = split_inverse(u, {limit});
  return {ft.numerator.times(fu.denominator, limit), fu.numerator.times(ft.denominator, limit)};
}

struct GilOutcome {
  bool verdict = true;
  std::optional<Assignment> witness;
};

class GilDecider {
 public:
  explicit GilDecider(const DecideOptions& opts) : opts_(opts) {}

  GilOutcome run(const Term& t, const Term& u, std::size_t depth) {
    const auto vars = vars_of(t, u);
    if (vars.empty()) {
      ClosedNormal a = closed_normal_iamdz(t, {opts_.max_monomials});
      ClosedNormal b = closed_normal_iamdz(u, {opts_.max_monomials});
      GilOutcome out{a == b, Assignment{}};
      note(depth, "closed " + a.to_string() + " = " + b.to_string(), out.verdict);
      return out;
    }

    ZeroElim s = zero_elim(t);
    ZeroElim s2 = zero_elim(u);
    const bool sz = std::holds_alternative<ZeroResult>(s);
    const bool s2z = std::holds_alternative<ZeroResult>(s2);
    if (sz && s2z) {
      note(depth, "0 = 0", true);
      return {true, Assignment{}};
    }
    if (sz || s2z) {
      // A zero-free term is positive once every variable is positive.
      const Term& other = sz ? std::get<Term>(s2) : std::get<Term>(s);
      Assignment w;
      for (const auto& v : free_vars(other)) w[v] = Rational(1);
      note(depth, "0 = " + print(other), false);
      return {false, std::move(w)};
    }

    const Term& a = std::get<Term>(s);
    const Term& b = std::get<Term>(s2);
    const auto live = vars_of(a, b);
    if (live.empty()) return run(a, b, depth);

    std::string key = print(a) + " = " + print(b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    GilOutcome out;
    CrossNormals cn = cross_normals(a, b, opts_);
    bool positive_part = cn.lhs == cn.rhs;
    note(depth, key + " over positives", positive_part);
    if (!positive_part) {
      out.verdict = false;
      if (auto c = search_counterexample(a, b, Carrier::PositiveRationals, opts_)) out.witness = c->assignment;
    } else {
      for (const auto& x : live) {
        GilOutcome sub = run(substitute(a, x, Term::zero()), substitute(b, x, Term::zero()), depth + 1);
        if (!sub.verdict) {
          out.verdict = false;
          if (sub.witness) {
            out.witness = std::move(sub.witness);
            (*out.witness)[x] = Rational(0);
          }
          break;
        }
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  RecursionTrace take_trace() { return {std::move(trace_)}; }

 private:
  void note(std::size_t depth, std::string goal, bool verdict) {
    constexpr std::size_t kMaxTrace = 256;
    if (trace_.size() < kMaxTrace) trace_.push_back({std::string(2 * depth, ' ') + std::move(goal), verdict});
  }

  const DecideOptions& opts_;
  std::unordered_map<std::string, GilOutcome> memo_;
  std::vector<SubDecision> trace_;
};

}  // namespace

Carrier carrier_for(Signature sig) noexcept {
  switch (sig) {
    case Signature::IAMD:
    case Signature::DAMD:
      return Carrier::PositiveRationals;
    case Signature::IAMDZ:
    case Signature::DAMDZ:
      return Carrier::NonNegativeRationals;
    default:
      return Carrier::AllRationals;
  }
}

Decision decide_iamd(const Term& t, const Term& u, const DecideOptions& opts) {
  require_conforms(t, Signature::IAMD, "decide_iamd lhs");
  require_conforms(u, Signature::IAMD, "decide_iamd rhs");
  CrossNormals cn = cross_normals(t, u, opts);
  if (cn.lhs == cn.rhs) return {true, MatchedNormals{cn.lhs.to_string(), cn.rhs.to_string()}};
  if (auto c = search_counterexample(t, u, Carrier::PositiveRationals, opts)) return {false, std::move(*c)};
  return {false, MatchedNormals{cn.lhs.to_string(), cn.rhs.to_string()}};
}

Decision decide_iamdz_gil(const Term& t, const Term& u, const DecideOptions& opts) {
  require_conforms(t, Signature::IAMDZ, "decide_iamdz_gil lhs");
  require_conforms(u, Signature::IAMDZ, "decide_iamdz_gil rhs");
  const auto vars = vars_of(t, u);
  if (vars.empty()) {
    ClosedNormal a = closed_normal_iamdz(t, {opts.max_monomials});
    ClosedNormal b = closed_normal_iamdz(u, {opts.max_monomials});
    return {a == b, MatchedNormals{a.to_string(), b.to_string()}};
  }

  GilDecider decider(opts);
  GilOutcome out = decider.run(t, u, 0);
  if (out.verdict) return {true, decider.take_trace()};

  if (auto c = search_counterexample(t, u, Carrier::NonNegativeRationals, opts)) return {false, std::move(*c)};
  if (out.witness) {
    Assignment env = *out.witness;
    for (const auto& v : vars) env.try_emplace(v, Rational(1));
    if (auto c = distinguishes(t, u, env, Carrier::NonNegativeRationals)) return {false, std::move(*c)};
  }
  return {false, decider.take_trace()};
}

Decision decide_divisive(const Term& t, const Term& u, TheoryId theory, const DecideOptions& opts) {
  switch (theory) {
    case TheoryId::E_DAMD:
      require_conforms(t, Signature::DAMD, "decide_divisive lhs");
      require_conforms(u, Signature::DAMD, "decide_divisive rhs");
      return decide_iamd(div_to_inv(t), div_to_inv(u), opts);
    case TheoryId::RATDAZ_GIL:
      require_conforms(t, Signature::DAMDZ, "decide_divisive lhs");
      require_conforms(u, Signature::DAMDZ, "decide_divisive rhs");
      return decide_iamdz_gil(div_to_inv(t), div_to_inv(u), opts);
    default:
      throw Error(Errc::UnsupportedTheory, "no divisive decision procedure for theory " +
                                               std::string(theory_name(theory)));
  }
}

Decision decide_closed(const Term& t, const Term& u, Signature sig) {
  require_conforms(t, sig, "decide_closed lhs");
  require_conforms(u, sig, "decide_closed rhs");
  if (!is_closed(t) || !is_closed(u)) throw Error(Errc::NotClosed, "decide_closed needs closed terms");
  Carrier carrier = carrier_for(sig);
  Rational a = eval_total(t, {}, carrier);
  Rational b = eval_total(u, {}, carrier);
  return {a == b, MatchedNormals{ClosedNormal::from_rational(a).to_string(),
                                 ClosedNormal::from_rational(b).to_string()}};
}

}  // namespace meadow
