#pragma once

// Multivariate polynomials with strictly positive integer coefficients.
//
// There is no zero polynomial and no subtraction: every PosPoly has at least
// one monomial and every coefficient is >= 1. These are the canonical forms
// of inverse-free terms over {1, +, *}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "meadow/rational.hpp"

namespace meadow {

/// Power product, sparse: (variable, exponent) pairs sorted by variable name,
/// every exponent >= 1. The empty monomial is the constant 1.
using Monomial = std::vector<std::pair<std::string, std::uint32_t>>;

std::uint64_t total_degree(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Graded lexicographic order, larger first: higher total degree wins, ties
/// broken by the exponent of the alphabetically earliest variable.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

inline constexpr std::size_t kDefaultMaxMonomials = 100000;

class PosPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class, GrlexGreater>;

  /// The constant 1.
  PosPoly();

  /// Throws InvalidArgument unless k >= 1.
  static PosPoly constant(const mpz_class& k);
  static PosPoly variable(const std::string& name);
  /// Throws InvalidArgument if the map is empty or a coefficient is < 1.
  static PosPoly from_terms(TermMap terms);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t monomial_count() const noexcept { return terms_.size(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial when the polynomial is constant.
  const mpz_class& constant_value() const;

  /// Pointwise coefficient sum. Throws SizeLimit above `max_monomials`.
  PosPoly plus(const PosPoly& other, std::size_t max_monomials = kDefaultMaxMonomials) const;
  /// Convolution product. Throws SizeLimit above `max_monomials`.
  PosPoly times(const PosPoly& other, std::size_t max_monomials = kDefaultMaxMonomials) const;

  /// Exact evaluation; variables missing from `env` raise UnboundVariable.
  Rational evaluate(const Assignment& env) const;

  /// Graded-lex descending rendering, e.g. `2*x^2*y + x + 3`.
  std::string to_string() const;

  friend bool operator==(const PosPoly& a, const PosPoly& b) { return a.terms_ == b.terms_; }

 private:
  explicit PosPoly(TermMap terms) : terms_(std::move(terms)) {}
  TermMap terms_;
};

/// numerator * denominator^-1, with no cancellation attempted.
struct PolyFraction {
  PosPoly numerator;
  PosPoly denominator;

  Rational evaluate(const Assignment& env) const;
  std::string to_string() const;

  friend bool operator==(const PolyFraction&, const PolyFraction&) = default;
};

}  // namespace meadow
