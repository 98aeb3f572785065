#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onepoint {

enum class ErrorCode {
  MalformedInterval,
  ParseError,
  NotASubset,
  EmptySpace,
  NotClosed,
  NotDisjoint,
  CompactComponent,
  PointOutsideComponent,
  TailIndexTooLarge,
  InvalidExtension,
  InvalidOpenSet,
  EqualPoints,
  NotClosedInY,
  PInBoth,
  DensityFailure,
  FidelityFailure,
  NotACover,
  SizeTooLarge,
  InvalidTopology,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInterval: return "MalformedInterval";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::CompactComponent: return "CompactComponent";
    case ErrorCode::PointOutsideComponent: return "PointOutsideComponent";
    case ErrorCode::TailIndexTooLarge: return "TailIndexTooLarge";
    case ErrorCode::InvalidExtension: return "InvalidExtension";
    case ErrorCode::InvalidOpenSet: return "InvalidOpenSet";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::NotClosedInY: return "NotClosedInY";
    case ErrorCode::PInBoth: return "PInBoth";
    case ErrorCode::DensityFailure: return "DensityFailure";
    case ErrorCode::FidelityFailure: return "FidelityFailure";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::InvalidTopology: return "InvalidTopology";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace onepoint
