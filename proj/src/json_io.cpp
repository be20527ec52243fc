#include "hyptrace/json_io.hpp"

#include <cmath>

namespace hyptrace::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

double as_number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
  return v;
}

// Negative zero would print as -0.0.
double num(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

double number_field(const Json& j, const char* key) { return as_number(field(j, key), key); }

int integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string(key) + " must be an integer");
  return v.get<int>();
}

Json to_json(const Isometry& g) {
  return Json{{"matrix", Json::array({Json::array({num(g.a()), num(g.b())}), Json::array({num(g.c()), num(g.d())})})}};
}

Isometry isometry_from_json(const Json& j) {
  const Json& m = field(j, "matrix");
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
      !m[1].is_array() || m[1].size() != 2) {
    throw InputError("matrix must be [[a, b], [c, d]]");
  }
  return Isometry::normalize(as_number(m[0][0], "a"), as_number(m[0][1], "b"),
                             as_number(m[1][0], "c"), as_number(m[1][1], "d"));
}

Json to_json(const BoundaryPoint& p) {
  if (p.is_infinite()) return "inf";
  return num(p.value());
}

BoundaryPoint boundary_point_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return BoundaryPoint::infinity();
  return BoundaryPoint(as_number(j, "boundary point"));
}

Json to_json(const Geodesic& line) {
  return Json{{"from", to_json(line.from())}, {"to", to_json(line.to())}};
}

Geodesic geodesic_from_json(const Json& j) {
  const auto from = boundary_point_from_json(field(j, "from"));
  const auto to = boundary_point_from_json(field(j, "to"));
  if (from == to) throw InputError("geodesic endpoints coincide");
  return {from, to};
}

Json to_json(const HPoint& p) { return Json{{"x", num(p.x)}, {"y", p.y}}; }

HPoint hpoint_from_json(const Json& j) {
  const HPoint p{number_field(j, "x"), number_field(j, "y")};
  if (!(p.y > 0.0)) throw InputError("y must be positive");
  return p;
}

Json to_json(const IsometryClass& cls) {
  Json out{{"class", std::string(to_string(cls.kind))}};
  if (cls.length) out["length"] = *cls.length;
  return out;
}

TranslationKind translation_kind_from_json(const Json& j) {
  const Json& k = field(j, "kind");
  if (k.is_string()) {
    const auto name = k.get<std::string>();
    if (name == "hyperbolic") return TranslationKind::Hyperbolic;
    if (name == "glide_reflection" || name == "glide") return TranslationKind::Glide;
  }
  throw InputError("kind must be \"hyperbolic\" or \"glide_reflection\"");
}

CurveData curve_from_json(const Json& j) {
  CurveData c;
  c.length = number_field(j, "length");
  const Json& s = field(j, "sided");
  if (s == "one_sided") {
    c.sided = Sidedness::OneSided;
  } else if (s == "two_sided") {
    c.sided = Sidedness::TwoSided;
  } else {
    throw InputError("sided must be \"one_sided\" or \"two_sided\"");
  }
  return c;
}

Json to_json(const CompositionPrediction& p) {
  Json out{{"half_trace", num(p.half_trace)},
           {"formula_case", std::string(to_string(p.formula_case))}};
  const Json cls = to_json(p.predicted_class);
  for (const auto& [k, v] : cls.items()) out[k] = v;
  return out;
}

Json to_json(const OracleReport& r) {
  return Json{{"formula_case", std::string(to_string(r.formula_case))},
              {"theta", r.theta},
              {"predicted", num(r.predicted)},
              {"actual", num(r.actual)},
              {"abs_error", num(r.abs_error)}};
}

Json to_json(const SmoothingOutcome& s) {
  Json out{{"outcome", std::string(to_string(s.tag))}, {"half_trace", num(s.half_trace)}};
  if (s.length) out["length"] = *s.length;
  if (s.reflection_degenerate) out["reflection_degenerate"] = true;
  if (s.tag == SmoothingTag::SubUnit) out["note"] = "not realizable";
  return out;
}

Json to_json(const PunctureSearchResult& r) {
  return Json{{"ms", r.ms}, {"f_case", std::string(to_string(r.f_case))}, {"r", num(r.r)}, {"s", num(r.s)}};
}

Json to_json(const SelfIntersectionBound& b) {
  Json flags = Json::array();
  for (bool f : b.threshold_satisfied) flags.push_back(f);
  return Json{{"m_lower", b.m_lower}, {"threshold_satisfied", flags}};
}

}  // namespace hyptrace::io
