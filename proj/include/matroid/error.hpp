#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matroid {

enum class ErrorCode {
  EmptyFamily,
  UnequalCardinality,
  ExchangeFailure,
  AxiomViolation,
  GroundSetTooLarge,
  CapExceeded,
  BoundsViolation,
  NotPrime,
  NotAnRPartition,
  EmptyGroundSet,
  NotCircuitHyperplane,
  NotModularCut,
  NotAFlat,
  LoopPresent,
  NonzeroRemainder,
  NotBalanced,
  WrongDimension,
  FlatCountTooLarge,
  EnumerationTooLarge,
  MixedCardinality,
  InvalidArgument,
  Internal,
  Parse,
};

constexpr std::string_view error_name(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::UnequalCardinality: return "UnequalCardinality";
    case ErrorCode::ExchangeFailure: return "ExchangeFailure";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BoundsViolation: return "BoundsViolation";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotAnRPartition: return "NotAnRPartition";
    case ErrorCode::EmptyGroundSet: return "EmptyGroundSet";
    case ErrorCode::NotCircuitHyperplane: return "NotCircuitHyperplane";
    case ErrorCode::NotModularCut: return "NotModularCut";
    case ErrorCode::NotAFlat: return "NotAFlat";
    case ErrorCode::LoopPresent: return "LoopPresent";
    case ErrorCode::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::FlatCountTooLarge: return "FlatCountTooLarge";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::MixedCardinality: return "MixedCardinality";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the condition;
/// the message carries the witness (offending subsets, indices, line numbers).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace matroid
