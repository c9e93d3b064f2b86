#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jinsig {

enum class ErrorCode {
  InvalidMesh,
  IndexOutOfRange,
  DegenerateArm,
  DegenerateTriple,
  CollinearPoints,
  OutOfDomain,
  InvalidGroupElement,
  NotOrdinary,
  NotConvex,
  NotClosed,
  SchemeSpacingMismatch,
  MeshTooShort,
  DegenerateStencil,
  DegenerateConfiguration,
  ZeroF,
  ParabolicConic,
  ZeroDenominator,
  WrongCurvatureSign,
  NonRealMu,
  LengthMismatch,
  NoNonCollinearTriple,
  InvalidMode,
  InvalidStep,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMesh: return "InvalidMesh";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateArm: return "DegenerateArm";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::InvalidGroupElement: return "InvalidGroupElement";
    case ErrorCode::NotOrdinary: return "NotOrdinary";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::SchemeSpacingMismatch: return "SchemeSpacingMismatch";
    case ErrorCode::MeshTooShort: return "MeshTooShort";
    case ErrorCode::DegenerateStencil: return "DegenerateStencil";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::ZeroF: return "ZeroF";
    case ErrorCode::ParabolicConic: return "ParabolicConic";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::WrongCurvatureSign: return "WrongCurvatureSign";
    case ErrorCode::NonRealMu: return "NonRealMu";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NoNonCollinearTriple: return "NoNonCollinearTriple";
    case ErrorCode::InvalidMode: return "InvalidMode";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jinsig
