#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "meadow/poly.hpp"
#include "meadow/rational.hpp"
#include "meadow/term.hpp"

namespace meadow {

struct NormalizeOptions {
  std::size_t max_monomials = kDefaultMaxMonomials;
};

/// Normal form of a closed term: the constant 0, or +-n * m^-1 with n, m >= 1
/// and gcd(n, m) = 1. The sign is only ever negative for full-meadow terms.
class ClosedNormal {
 public:
  static ClosedNormal zero_form();
  /// Reduces n / m to lowest terms. Requires n, m >= 1.
  static ClosedNormal fraction(const mpz_class& n, const mpz_class& m, bool negative = false);
  static ClosedNormal from_rational(const Rational& q);

  bool is_zero() const noexcept { return zero_; }
  bool negative() const noexcept { return negative_; }
  const mpz_class& numerator() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }

  Rational to_rational() const;
  /// `0`, `n`, or `n/m`, with a leading `-` for negative values.
  std::string to_string() const;

  friend bool operator==(const ClosedNormal& a, const ClosedNormal& b) {
    return a.zero_ == b.zero_ && a.negative_ == b.negative_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ClosedNormal() = default;
  bool zero_ = true;
  bool negative_ = false;
  mpz_class num_ = 0;
  mpz_class den_ = 1;
};

/// Inverse-free split: (p, q) with t = p * q^-1 derivable in inversive
/// arithmetical meadows. Uses (x*y)^-1 = x^-1 * y^-1 and (x^-1)^-1 = x.
PolyFraction split_inverse(const Term& t, const NormalizeOptions& opts = {});

/// Fully distributed positive-coefficient polynomial of an inverse-free term.
PosPoly poly_normal(const Term& t, const NormalizeOptions& opts = {});

ClosedNormal closed_normal_iamd(const Term& t, const NormalizeOptions& opts = {});
ClosedNormal closed_normal_iamdz(const Term& t, const NormalizeOptions& opts = {});
/// Closed terms with negation and zero-totalized inverse or division.
ClosedNormal closed_normal_full(const Term& t);

struct ZeroResult {
  friend bool operator==(ZeroResult, ZeroResult) { return true; }
};

/// Either the term is provably 0, or an equal term with no occurrence of 0.
using ZeroElim = std::variant<ZeroResult, Term>;

/// Bottom-up rewriting with 0 + u -> u, u + 0 -> u, 0 * u -> 0, u * 0 -> 0 and
/// 0^-1 -> 0.
ZeroElim zero_elim(const Term& t);

}  // namespace meadow
