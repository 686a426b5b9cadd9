#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skein {

enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  Unsupported,
  SyntaxError,
  UnknownGenerator,
  ExponentCap,
  DimensionMismatch,
  SurfaceMismatch,
  DegenerateShadow,
  VanishingCycle,
  IncompatiblePuncture,
  EigenstructureMismatch,
  NoConsistentRoot,
  NonScalarChebyshev,
  Serialization,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI and tests can dispatch on the kind of failure rather than the message.
class SkeinError : public std::runtime_error {
 public:
  SkeinError(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures also record the byte offset into the source text.
class ParseError : public SkeinError {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Short scientific rendering of a magnitude for messages, e.g. "2.4e-76".
std::string format_magnitude(double x);

}  // namespace skein
