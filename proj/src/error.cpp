#include "weil/error.hpp"

namespace weil {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::FunctionalEquationFails: return "FunctionalEquationFails";
    case ErrorCode::RootsOffCircle: return "RootsOffCircle";
    case ErrorCode::IsolationFailure: return "IsolationFailure";
    case ErrorCode::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case ErrorCode::InconsistentTorsion: return "InconsistentTorsion";
    case ErrorCode::SmallFieldError: return "SmallFieldError";
    case ErrorCode::NotSmall: return "NotSmall";
    case ErrorCode::NotNontrivial: return "NotNontrivial";
    case ErrorCode::NotSufficientlyLarge: return "NotSufficientlyLarge";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::WeightNotAboveH: return "WeightNotAboveH";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LabelSyntax: return "LabelSyntax";
  }
  return "Unknown";
}

}  // namespace weil
