#include "hyptrace/error.hpp"

namespace hyptrace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotPositiveTranslation: return "NotPositiveTranslation";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::PointNotOnBoth: return "PointNotOnBoth";
    case ErrorCode::PointNotOnGeodesic: return "PointNotOnGeodesic";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::AxesDoNotCross: return "AxesDoNotCross";
    case ErrorCode::InvalidAngle: return "InvalidAngle";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::ConditionNotSatisfied: return "ConditionNotSatisfied";
  }
  return "Unknown";
}

}  // namespace hyptrace
