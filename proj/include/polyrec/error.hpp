#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace polyrec {

enum class ErrorCode {
  AlphabetMismatch,
  NonInjectiveRename,
  LetterNotInTarget,
  OverlappingAlphabets,
  UnknownLetter,
  WordAlreadyPresent,
  WordAbsent,
  NotInLanguage,
  FiniteLanguage,
  ResourceLimit,
  BudgetExceeded,
  FormatError,
  DuplicateTransition,
  UnknownState,
  SyntaxError,
  ZeroDenominator,
  NotIntegerValued,
  NegativeValue,
  NegativeLeadingCoefficient,
  InfeasibleDecomposition,
  CannotAdjust,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; `code()` identifies the failure,
// `witness()` carries the offending integer (polynomial argument, line
// number, or text position) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<long long> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<long long> witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::optional<long long> witness_;
};

}  // namespace polyrec
