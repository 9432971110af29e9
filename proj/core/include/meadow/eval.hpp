#pragma once

#include "meadow/rational.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Exact zero-totalized evaluation: 0^-1 = 0 and q / 0 = q * (1 / 0) = 0.
///
/// The carrier restricts what may appear: Neg only over AllRationals, the
/// constant 0 never over PositiveRationals, and every assigned value must lie
/// in the carrier. Violations raise CarrierViolation; a free variable missing
/// from `env` raises UnboundVariable.
Rational eval_total(const Term& t, const Assignment& env, Carrier carrier);

/// Throws CarrierViolation if some value of `env` lies outside `carrier`.
void require_in_carrier(const Assignment& env, Carrier carrier);

}  // namespace meadow
