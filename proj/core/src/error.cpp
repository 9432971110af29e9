#include "meadow/error.hpp"

namespace meadow {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroNotInSignature: return "ZeroNotInSignature";
    case Errc::NotInSignature: return "NotInSignature";
    case Errc::ContainsInverse: return "ContainsInverse";
    case Errc::NotClosed: return "NotClosed";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::CarrierViolation: return "CarrierViolation";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::MixedSignature: return "MixedSignature";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::UnsupportedTheory: return "UnsupportedTheory";
    case Errc::NumeralTooLarge: return "NumeralTooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : Error(Errc::SyntaxError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace meadow
