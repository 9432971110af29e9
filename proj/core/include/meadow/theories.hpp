#pragma once

// Named axiom sets for commutative rings, arithmetical meadows (with and
// without zero), meadows, and the initial-algebra specifications of the
// rational instances; plus sampled model checking against exact evaluators.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "meadow/rational.hpp"
#include "meadow/term.hpp"

namespace meadow {

enum class TheoryId {
  E_CR,
  E_ACRZ,
  E_ACR,
  E_IAMD,
  E_DAMD,
  E_IAMDZ,
  E_DAMDZ,
  E_IMD,
  E_DMD,
  RATZI_SPEC,
  RATZD_SPEC,
  RATIAZ_SPEC,
  RATDAZ_SPEC,
  RATIAZ_ALT_SPEC,
  RATIAZ_GIL,
  RATDAZ_ALT_SPEC,
  RATDAZ_GIL,
};

/// Every theory, in declaration order.
const std::vector<TheoryId>& all_theories();

/// Lowercase CLI name: cr, acrz, acr, iamd, ..., ratiaz-gil, ratdaz-gil.
std::string_view theory_name(TheoryId id) noexcept;
std::optional<TheoryId> theory_from_name(std::string_view name) noexcept;

/// Directionless equation.
struct Equation {
  Term lhs;
  Term rhs;

  std::string to_string() const;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// guard != 0  =>  lhs = rhs
struct ConditionalLaw {
  Term guard;
  Equation conclusion;

  std::string to_string() const;
};

struct Theory {
  TheoryId id;
  Signature signature;
  std::vector<Equation> equations;
  std::optional<ConditionalLaw> conditional;
};

const Theory& theory(TheoryId id);

/// theory(id).equations
const std::vector<Equation>& axioms(TheoryId id);

/// Operators occurring in the theory's laws.
std::set<Op> operations_used(TheoryId id);

/// An exact evaluator: a carrier plus the operators it interprets.
struct Interpretation {
  std::string name;
  Carrier carrier;
  std::set<Op> operations;
};

/// {1, +, *, ^-1, /} over the positive rationals.
Interpretation positive_rationals();
/// {0, 1, +, *, ^-1, /} over the non-negative rationals, zero-totalized.
Interpretation nonnegative_rationals();
/// Every operator over all rationals, zero-totalized.
Interpretation all_rationals();

struct LawReport {
  std::string law;
  bool passed = true;
  std::size_t checked = 0;
  /// First assignment on which the two sides differ.
  std::optional<Assignment> witness;
  std::optional<Rational> lhs_value;
  std::optional<Rational> rhs_value;
};

struct ModelReport {
  std::vector<LawReport> laws;
  bool all_passed() const;
};

/// Evaluates every law at `samples` pseudo-random assignments drawn from the
/// interpretation's carrier. Deterministic in `seed`. Throws
/// SignatureMismatch if the theory uses an operator the interpretation lacks.
ModelReport check_model(TheoryId id, const Interpretation& interp, std::size_t samples,
                        std::uint64_t seed);

}  // namespace meadow
