#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2cy {

enum class ErrorCode {
  NonFiniteType,
  NotSymmetrizable,
  NotPDominant,
  NotGDominant,
  NotARepresentation,
  OutOfRange,
  Unsupported,
  TrivialSummand,
  NotMaximalParabolic,
  NotGloballyGenerated,
  WrongDeterminant,
  RankTooLarge,
  FitInconsistent,
  UndeterminedHodge,
  TheoremViolated,
  MissingPaperRow,
  Inconsistent,
  Overflow,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFiniteType: return "NonFiniteType";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NotPDominant: return "NotPDominant";
    case ErrorCode::NotGDominant: return "NotGDominant";
    case ErrorCode::NotARepresentation: return "NotARepresentation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::TrivialSummand: return "TrivialSummand";
    case ErrorCode::NotMaximalParabolic: return "NotMaximalParabolic";
    case ErrorCode::NotGloballyGenerated: return "NotGloballyGenerated";
    case ErrorCode::WrongDeterminant: return "WrongDeterminant";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::FitInconsistent: return "FitInconsistent";
    case ErrorCode::UndeterminedHodge: return "UndeterminedHodge";
    case ErrorCode::TheoremViolated: return "TheoremViolated";
    case ErrorCode::MissingPaperRow: return "MissingPaperRow";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; `code()`
/// identifies the violated condition, `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace g2cy
