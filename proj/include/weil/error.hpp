#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weil {

enum class ErrorCode {
  NotPrimePower,
  NotMonic,
  OddDegree,
  FunctionalEquationFails,
  RootsOffCircle,
  IsolationFailure,
  PrecisionCapExceeded,
  InconsistentTorsion,
  SmallFieldError,
  NotSmall,
  NotNontrivial,
  NotSufficientlyLarge,
  NotInSemigroup,
  WeightNotAboveH,
  InvalidArgument,
  LabelSyntax,
};

std::string_view to_string(ErrorCode code);

class WeilError : public std::runtime_error {
 public:
  WeilError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weil
