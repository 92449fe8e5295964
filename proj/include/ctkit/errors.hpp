#pragma once

#include <stdexcept>
#include <string>

namespace ctkit {

// Domain-level failures. Each carries a stable name that the CLI reports
// verbatim with exit code 2.
enum class ErrorCode {
  InvalidPiece,
  OutOfDomain,
  NotLsc,
  ZeroFunction,
  NotNested,
  NotFull,
  NoSpectralGap,
  InvalidTolerance,
  DegenerateSpectrum,
  RankMismatch,
  StepTooLarge,
  NoOverlap,
  NotInGroup,
  WrongDimension,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidPiece: return "InvalidPiece";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotLsc: return "NotLsc";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotFull: return "NotFull";
    case ErrorCode::NoSpectralGap: return "NoSpectralGap";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::WrongDimension: return "WrongDimension";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}
  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

// Malformed input (JSON structure, rationals, value constraints at the
// serialization boundary). The CLI maps this to exit code 1. `location` is a
// JSON-path-like hint such as "breakpoints[2]".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& location, const std::string& detail)
      : std::runtime_error("parse error at " + location + ": " + detail),
        location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace ctkit
