#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace meadow {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts `n`, `n/m`, `-n`, `-n/m` with decimal digits. Throws InvalidArgument.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  const mpq_class& value() const noexcept { return value_; }

  /// Zero-totalized multiplicative inverse: 0 maps to 0.
  Rational inverse() const;

  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

enum class Carrier { PositiveRationals, NonNegativeRationals, AllRationals };

std::string_view carrier_name(Carrier c) noexcept;
/// Accepts pos, nonneg, all.
std::optional<Carrier> carrier_from_name(std::string_view name) noexcept;
bool carrier_contains(Carrier c, const Rational& q);

using Assignment = std::map<std::string, Rational>;

/// Parses `x=1/2,y=3`. Values outside `carrier` raise CarrierViolation.
Assignment parse_assignment(std::string_view text, Carrier carrier);
std::string format_assignment(const Assignment& env);

/// Small pseudo-random rational in the carrier: numerator uniform in [0, 12]
/// ([1, 12] for positives, random sign for all rationals), denominator in [1, 6].
Rational sample_rational(std::mt19937_64& rng, Carrier carrier);

}  // namespace meadow
