#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grmds {

enum class ErrorCode {
  NotPrime,
  ModulusNotBasicPrimitive,
  BadAutomorphismExponent,
  BadParameter,
  MixedRings,
  NotAUnit,
  DegreeMismatch,
  NonUnitLeadingCoefficient,
  DivisionByZero,
  DependentRoots,
  DuplicateRoot,
  CharacteristicDividesLength,
  NotMonic,
  DegreeTooSmall,
  NotSquare,
  PreconditionViolated,
  UnsupportedShape,
  CharacteristicMismatch,
  InternalInconsistency,
  NotNilpotent,
  BaseNotMds,
  RequiresFieldCase,
  BudgetExceeded,
  NotRightDivisor,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ModulusNotBasicPrimitive: return "ModulusNotBasicPrimitive";
    case ErrorCode::BadAutomorphismExponent: return "BadAutomorphismExponent";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DependentRoots: return "DependentRoots";
    case ErrorCode::DuplicateRoot: return "DuplicateRoot";
    case ErrorCode::CharacteristicDividesLength: return "CharacteristicDividesLength";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::BaseNotMds: return "BaseNotMds";
    case ErrorCode::RequiresFieldCase: return "RequiresFieldCase";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotRightDivisor: return "NotRightDivisor";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace grmds
