#pragma once

// Partial meadows obtained by punching: the total zero-totalized operations
// with selected arguments made undefined.

#include <optional>
#include <string>
#include <string_view>

#include "meadow/rational.hpp"
#include "meadow/term.hpp"

namespace meadow {

enum class Punch {
  Inv0,         ///< 0^-1 undefined (inversive, with zero)
  DivAll0,      ///< q / 0 undefined for every q (divisive, with zero)
  DivNonzero0,  ///< q / 0 undefined for q != 0; 0 / 0 = 0
};

std::string_view punch_name(Punch p) noexcept;
/// Accepts inv0, divall0, divnz0.
std::optional<Punch> punch_from_name(std::string_view name) noexcept;

class PartialValue {
 public:
  static PartialValue defined(Rational value) { return PartialValue(std::move(value)); }
  static PartialValue undefined() { return PartialValue(); }

  bool is_defined() const noexcept { return value_.has_value(); }
  /// Throws InvalidArgument when undefined.
  const Rational& value() const;
  std::string to_string() const;

  friend bool operator==(const PartialValue&, const PartialValue&) = default;

 private:
  PartialValue() = default;
  explicit PartialValue(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

/// Evaluation over the non-negative rationals with strict propagation of
/// undefinedness. Inv0 needs an iamdz term, the divisive punches a damdz
/// term; otherwise SignatureMismatch.
PartialValue eval_punched(const Term& t, const Assignment& env, Punch punch);

enum class DefClass { InNz, InDefOnly, Outside };

std::string_view def_class_name(DefClass c) noexcept;

/// How `x + y` enters Nz.
enum class NzAdditionRule {
  /// x in Nz and y in Def (either order). Sound for 0^-1 punching.
  Guarded,
  /// x in Nz, y arbitrary. Admits 1 + 0^-1, which is undefined.
  Literal,
};

/// Syntactic definedness of an iamdz term, by the inductive rules
///   1 in Nz;  x + y, y + x in Nz if x in Nz (see NzAdditionRule);
///   x * y in Nz if x, y in Nz;  x^-1 in Nz if x in Nz;
///   0 in Def;  Nz within Def;  x + y, x * y in Def if x, y in Def.
/// Variables are in Def but not Nz, since they may take the value 0.
DefClass classify_def(const Term& t, NzAdditionRule rule = NzAdditionRule::Guarded);

}  // namespace meadow
