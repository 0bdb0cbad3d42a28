#include "polyrec/error.hpp"

namespace polyrec {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::NonInjectiveRename: return "NonInjectiveRename";
    case ErrorCode::LetterNotInTarget: return "LetterNotInTarget";
    case ErrorCode::OverlappingAlphabets: return "OverlappingAlphabets";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::WordAlreadyPresent: return "WordAlreadyPresent";
    case ErrorCode::WordAbsent: return "WordAbsent";
    case ErrorCode::NotInLanguage: return "NotInLanguage";
    case ErrorCode::FiniteLanguage: return "FiniteLanguage";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::DuplicateTransition: return "DuplicateTransition";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotIntegerValued: return "NotIntegerValued";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::NegativeLeadingCoefficient: return "NegativeLeadingCoefficient";
    case ErrorCode::InfeasibleDecomposition: return "InfeasibleDecomposition";
    case ErrorCode::CannotAdjust: return "CannotAdjust";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace polyrec
