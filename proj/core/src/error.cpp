#include "skein/error.hpp"

#include <cstdio>

namespace skein {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::ExponentCap: return "ExponentCap";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::DegenerateShadow: return "DegenerateShadow";
    case ErrorCode::VanishingCycle: return "VanishingCycle";
    case ErrorCode::IncompatiblePuncture: return "IncompatiblePuncture";
    case ErrorCode::EigenstructureMismatch: return "EigenstructureMismatch";
    case ErrorCode::NoConsistentRoot: return "NoConsistentRoot";
    case ErrorCode::NonScalarChebyshev: return "NonScalarChebyshev";
    case ErrorCode::Serialization: return "Serialization";
  }
  return "Unknown";
}

SkeinError::SkeinError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t position, const std::string& what)
    : SkeinError(code, what + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

std::string format_magnitude(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace skein
