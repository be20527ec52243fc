#include "hyptrace/trace_formulas.hpp"

#include <cmath>
#include <numbers>

#include "hyptrace/error.hpp"

namespace hyptrace {

namespace {

void require_length(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::InvalidLength, "translation length must be positive and finite");
  }
}

void require_angle(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw Error(ErrorCode::InvalidAngle, "forward angle must lie in (0, pi)");
  }
}

TranslationKind translation_kind(const Isometry& g, double tol) {
  switch (classify(g, tol).kind) {
    case IsometryKind::Hyperbolic: return TranslationKind::Hyperbolic;
    case IsometryKind::GlideReflection: return TranslationKind::Glide;
    default:
      throw Error(ErrorCode::NotPositiveTranslation,
                  "expected a hyperbolic element or a glide-reflection");
  }
}

// Checks that the axes cross at p and returns nothing else.
void require_crossing_at(const Isometry& g, const Isometry& h, const HPoint& p, double tol) {
  const auto crossing = intersect(axis(g, tol), axis(h, tol));
  if (!crossing || hyp_distance(crossing->point, p) > 1e-8) {
    throw Error(ErrorCode::AxesDoNotCross, "axes do not cross at the given point");
  }
}

}  // namespace

std::string_view to_string(FormulaCase c) {
  switch (c) {
    case FormulaCase::HypHyp: return "HypHyp";
    case FormulaCase::GlideHyp: return "GlideHyp";
    case FormulaCase::HypGlide: return "HypGlide";
    case FormulaCase::GlideGlide: return "GlideGlide";
  }
  return "unknown";
}

FormulaCase formula_case(TranslationKind g, TranslationKind h) {
  using K = TranslationKind;
  if (g == K::Hyperbolic) return h == K::Hyperbolic ? FormulaCase::HypHyp : FormulaCase::HypGlide;
  return h == K::Hyperbolic ? FormulaCase::GlideHyp : FormulaCase::GlideGlide;
}

double half_trace_formula(FormulaCase c, double t_g, double t_h, double theta) {
  // HypGlide is GlideHyp with the roles exchanged.
  const double a = c == FormulaCase::HypGlide ? t_h / 2.0 : t_g / 2.0;
  const double b = c == FormulaCase::HypGlide ? t_g / 2.0 : t_h / 2.0;
  const double ca = std::cosh(a), sa = std::sinh(a), cb = std::cosh(b), sb = std::sinh(b);
  const double cos_theta = std::cos(theta);
  if (cos_theta >= 0.0) {
    switch (c) {
      case FormulaCase::HypHyp: return ca * cb + sa * sb * cos_theta;
      case FormulaCase::GlideHyp:
      case FormulaCase::HypGlide: return sa * cb + ca * sb * cos_theta;
      case FormulaCase::GlideGlide: return sa * sb + ca * cb * cos_theta;
    }
  }
  // For obtuse angles write cos(theta) = 2 cos^2(theta/2) - 1. The large terms
  // then cancel analytically, which matters when theta is within a few ulps of pi
  // of the value that makes the result small.
  const double half = std::cos(theta / 2.0);
  const double c2 = 2.0 * half * half;
  switch (c) {
    case FormulaCase::HypHyp: return std::cosh(a - b) + sa * sb * c2;
    case FormulaCase::GlideHyp:
    case FormulaCase::HypGlide: return std::abs(std::sinh(a - b) + ca * sb * c2);
    case FormulaCase::GlideGlide: return std::abs(ca * cb * c2 - std::cosh(a - b));
  }
  return 0.0;
}

CompositionPrediction predict_half_trace(TranslationKind g_kind, double t_g,
                                         TranslationKind h_kind, double t_h, double theta,
                                         double tol) {
  require_length(t_g);
  require_length(t_h);
  require_angle(theta);

  CompositionPrediction out;
  out.formula_case = formula_case(g_kind, h_kind);
  out.half_trace = half_trace_formula(out.formula_case, t_g, t_h, theta);

  const double v = out.half_trace;
  if (out.formula_case == FormulaCase::GlideHyp || out.formula_case == FormulaCase::HypGlide) {
    if (v <= tol) {
      out.predicted_class = {IsometryKind::Reflection, std::nullopt};
    } else {
      out.predicted_class = {IsometryKind::GlideReflection, 2.0 * std::asinh(v)};
    }
  } else if (v > 1.0 + tol) {
    out.predicted_class = {IsometryKind::Hyperbolic, 2.0 * std::acosh(v)};
  } else if (v >= 1.0 - tol) {
    out.predicted_class = {IsometryKind::Parabolic, std::nullopt};
  } else {
    out.predicted_class = {IsometryKind::Elliptic, std::nullopt};
  }
  return out;
}

OracleReport verify_against_oracle(const Isometry& g, const Isometry& h, double tol) {
  const TranslationKind g_kind = translation_kind(g, tol);
  const TranslationKind h_kind = translation_kind(h, tol);
  const auto crossing = intersect(axis(g, tol), axis(h, tol));
  if (!crossing) throw Error(ErrorCode::AxesDoNotCross, "axes of g and h do not cross");

  const auto prediction = predict_half_trace(g_kind, translation_length(g, tol), h_kind,
                                             translation_length(h, tol), crossing->angle, tol);
  OracleReport report;
  report.predicted = prediction.half_trace;
  report.actual = std::abs(compose(g, h).trace()) / 2.0;
  report.abs_error = std::abs(report.predicted - report.actual);
  report.theta = crossing->angle;
  report.formula_case = prediction.formula_case;
  return report;
}

AxisPair standard_configuration(double theta) {
  require_angle(theta);
  const Geodesic g_axis = Geodesic::imaginary_axis();
  return {g_axis, geodesic_at_angle(g_axis, HPoint{0.0, 1.0}, theta)};
}

Isometry make_translation(TranslationKind kind, const Geodesic& line, double t) {
  return kind == TranslationKind::Hyperbolic ? make_hyperbolic(line, t) : make_glide(line, t);
}

HPoint predicted_axis_crossing_hyp_glide(const Isometry& g, const Isometry& h, const HPoint& p,
                                         double tol) {
  if (translation_kind(g, tol) != TranslationKind::Hyperbolic ||
      translation_kind(h, tol) != TranslationKind::Glide) {
    throw Error(ErrorCode::NotPositiveTranslation, "expected g hyperbolic and h a glide");
  }
  require_crossing_at(g, h, p, tol);
  return point_along(axis(g, tol), p, translation_length(g, tol) / 2.0);
}

HPoint predicted_axis_crossing_glide_hyp(const Isometry& g, const Isometry& h, const HPoint& p,
                                         double tol) {
  if (translation_kind(g, tol) != TranslationKind::Glide ||
      translation_kind(h, tol) != TranslationKind::Hyperbolic) {
    throw Error(ErrorCode::NotPositiveTranslation, "expected g a glide and h hyperbolic");
  }
  require_crossing_at(g, h, p, tol);
  return point_along(axis(h, tol), p, -translation_length(h, tol) / 2.0);
}

}  // namespace hyptrace
