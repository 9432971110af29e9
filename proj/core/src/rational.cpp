#include "meadow/rational.hpp"

#include <optional>

#include "meadow/error.hpp"
#include "meadow/term.hpp"

namespace meadow {

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::InvalidArgument, "malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) return Rational();
  return Rational(mpq_class(1) / value_);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::string_view carrier_name(Carrier c) noexcept {
  switch (c) {
    case Carrier::PositiveRationals: return "pos";
    case Carrier::NonNegativeRationals: return "nonneg";
    case Carrier::AllRationals: return "all";
  }
  return "?";
}

std::optional<Carrier> carrier_from_name(std::string_view name) noexcept {
  if (name == "pos") return Carrier::PositiveRationals;
  if (name == "nonneg") return Carrier::NonNegativeRationals;
  if (name == "all") return Carrier::AllRationals;
  return std::nullopt;
}

bool carrier_contains(Carrier c, const Rational& q) {
  switch (c) {
    case Carrier::PositiveRationals: return q.sign() > 0;
    case Carrier::NonNegativeRationals: return q.sign() >= 0;
    case Carrier::AllRationals: return true;
  }
  return false;
}

Assignment parse_assignment(std::string_view text, Carrier carrier) {
  Assignment env;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::InvalidArgument, "expected name=value, got '" + std::string(item) + "'");
    }
    std::string name(trim(item.substr(0, eq)));
    if (!is_identifier(name)) throw Error(Errc::InvalidArgument, "invalid variable name '" + name + "'");
    Rational value = Rational::parse(item.substr(eq + 1));
    if (!carrier_contains(carrier, value)) {
      throw Error(Errc::CarrierViolation, name + " = " + value.to_string() + " lies outside carrier " +
                                              std::string(carrier_name(carrier)));
    }
    env[name] = value;
  }
  return env;
}

std::string format_assignment(const Assignment& env) {
  std::string out;
  for (const auto& [name, value] : env) {
    if (!out.empty()) out += ",";
    out += name + "=" + value.to_string();
  }
  return out;
}

Rational sample_rational(std::mt19937_64& rng, Carrier carrier) {
  std::uniform_int_distribution<long> den_dist(1, 6);
  long lo = carrier == Carrier::PositiveRationals ? 1 : 0;
  std::uniform_int_distribution<long> num_dist(lo, 12);
  long num = num_dist(rng);
  long den = den_dist(rng);
  if (carrier == Carrier::AllRationals && std::uniform_int_distribution<int>(0, 1)(rng) == 1) num = -num;
  return Rational(mpz_class(num), mpz_class(den));
}

}  // namespace meadow
