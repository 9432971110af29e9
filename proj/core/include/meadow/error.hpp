#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace meadow {

enum class Errc {
  ZeroNotInSignature,
  NotInSignature,
  ContainsInverse,
  NotClosed,
  SizeLimit,
  CarrierViolation,
  UnboundVariable,
  SignatureMismatch,
  MixedSignature,
  SyntaxError,
  SchemaError,
  UnsupportedTheory,
  NumeralTooLarge,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace meadow
