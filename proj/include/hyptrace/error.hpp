#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyptrace {

enum class ErrorCode {
  SingularMatrix,
  NotPositiveTranslation,
  CoincidentPoints,
  PointNotOnBoth,
  PointNotOnGeodesic,
  NotTransverse,
  AxesDoNotCross,
  InvalidAngle,
  InvalidLength,
  ConditionNotSatisfied,
};

/// Identifier used in the CLI error payload, e.g. "AxesDoNotCross".
std::string_view to_string(ErrorCode code);

/// Domain error raised by every library operation that can fail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyptrace
