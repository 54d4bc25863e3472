#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gencov {

enum class ErrorKind {
  LengthMismatch,
  NonPositiveEntry,
  ProfileExceedsPart,
  StrengthTooLarge,
  StructureMismatch,
  InvalidBlock,
  EntryOutOfAlphabet,
  NotUnitProfile,
  ParameterOrderViolated,
  SinglePart,
  UnitProfilePart,
  ProfileBelowTwo,
  BasePartTooSmall,
  EmptyIndexSet,
  DegenerateRestriction,
  TargetBelowProfile,
  TargetExceedsPart,
  InvalidInput,
  StrengthMismatch,
  StrengthNotTwo,
  StrengthUnsupported,
  LambdaUnsupported,
  LabelOutOfRange,
  PartCountMismatch,
  CandidateSpaceTooLarge,
  SyntaxError,
  SemanticError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::ProfileExceedsPart: return "ProfileExceedsPart";
    case ErrorKind::StrengthTooLarge: return "StrengthTooLarge";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::EntryOutOfAlphabet: return "EntryOutOfAlphabet";
    case ErrorKind::NotUnitProfile: return "NotUnitProfile";
    case ErrorKind::ParameterOrderViolated: return "ParameterOrderViolated";
    case ErrorKind::SinglePart: return "SinglePart";
    case ErrorKind::UnitProfilePart: return "UnitProfilePart";
    case ErrorKind::ProfileBelowTwo: return "ProfileBelowTwo";
    case ErrorKind::BasePartTooSmall: return "BasePartTooSmall";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorKind::TargetBelowProfile: return "TargetBelowProfile";
    case ErrorKind::TargetExceedsPart: return "TargetExceedsPart";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::StrengthMismatch: return "StrengthMismatch";
    case ErrorKind::StrengthNotTwo: return "StrengthNotTwo";
    case ErrorKind::StrengthUnsupported: return "StrengthUnsupported";
    case ErrorKind::LambdaUnsupported: return "LambdaUnsupported";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::PartCountMismatch: return "PartCountMismatch";
    case ErrorKind::CandidateSpaceTooLarge: return "CandidateSpaceTooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the kinds above so
// callers (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gencov
