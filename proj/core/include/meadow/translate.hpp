#pragma once

#include "meadow/term.hpp"

namespace meadow {

/// Rewrites every u / v as u * v^-1. Throws MixedSignature if `t` already
/// contains ^-1. No simplification is performed.
Term div_to_inv(const Term& t);

/// Rewrites every u^-1 as 1 / u. Throws MixedSignature if `t` already
/// contains /. No simplification is performed.
Term inv_to_div(const Term& t);

/// The signature on the other side of the translation: iamd <-> damd,
/// iamdz <-> damdz, imd <-> dmd; cr maps to itself.
Signature counterpart(Signature sig) noexcept;

}  // namespace meadow
