#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hyptrace/geodesic.hpp"
#include "hyptrace/isometry.hpp"
#include "hyptrace/self_intersection.hpp"
#include "hyptrace/smoothing.hpp"
#include "hyptrace/trace_formulas.hpp"

namespace hyptrace::io {

using Json = nlohmann::ordered_json;

/// Well-formed JSON that does not match the expected schema.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double number_field(const Json& j, const char* key);
int integer_field(const Json& j, const char* key);

Json to_json(const Isometry& g);
Isometry isometry_from_json(const Json& j);

Json to_json(const BoundaryPoint& p);
BoundaryPoint boundary_point_from_json(const Json& j);

Json to_json(const Geodesic& line);
Geodesic geodesic_from_json(const Json& j);

Json to_json(const HPoint& p);
HPoint hpoint_from_json(const Json& j);

/// {"class": ..., "length": ...}; length only when present.
Json to_json(const IsometryClass& cls);

TranslationKind translation_kind_from_json(const Json& j);
CurveData curve_from_json(const Json& j);

Json to_json(const CompositionPrediction& p);
Json to_json(const OracleReport& r);
Json to_json(const SmoothingOutcome& s);
Json to_json(const PunctureSearchResult& r);
Json to_json(const SelfIntersectionBound& b);

}  // namespace hyptrace::io
