#pragma once

// Decision procedures for equations between terms.
//
//   decide_iamd       derivability from the inversive arithmetical meadow
//                     axioms: cross-multiplied polynomial normal forms agree.
//   decide_iamdz_gil  derivability from the alternative specification of the
//                     non-negative rationals plus x != 0 => x * x^-1 = 1,
//                     by recursion on the number of variables.
//   decide_divisive   the divisive counterparts, via div_to_inv.
//   decide_closed     closed terms, by exact evaluation in the rational
//                     instance matching the signature.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "meadow/rational.hpp"
#include "meadow/term.hpp"
#include "meadow/theories.hpp"

namespace meadow {

struct MatchedNormals {
  std::string lhs;
  std::string rhs;
};

struct Counterexample {
  Assignment assignment;
  Carrier carrier;
  Rational lhs_value;
  Rational rhs_value;
};

struct SubDecision {
  std::string goal;
  bool verdict;
};

struct RecursionTrace {
  std::vector<SubDecision> steps;
};

struct Decision {
  bool verdict = false;
  std::variant<MatchedNormals, Counterexample, RecursionTrace> evidence;
};

struct DecideOptions {
  std::size_t max_monomials = 100000;
  std::uint64_t seed = 0;
  /// Pseudo-random assignments tried after the structured candidates.
  std::size_t random_attempts = 256;
};

Decision decide_iamd(const Term& t, const Term& u, const DecideOptions& opts = {});
Decision decide_iamdz_gil(const Term& t, const Term& u, const DecideOptions& opts = {});

/// `theory` is E_DAMD (terms over damd) or RATDAZ_GIL (terms over damdz);
/// anything else raises UnsupportedTheory.
Decision decide_divisive(const Term& t, const Term& u, TheoryId theory, const DecideOptions& opts = {});

Decision decide_closed(const Term& t, const Term& u, Signature sig);

/// The carrier of the rational instance for `sig`: positives without 0,
/// non-negatives without -, all rationals otherwise.
Carrier carrier_for(Signature sig) noexcept;

}  // namespace meadow
