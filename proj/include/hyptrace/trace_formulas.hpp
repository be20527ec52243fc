#pragma once

#include <string_view>

#include "hyptrace/geodesic.hpp"
#include "hyptrace/isometry.hpp"

namespace hyptrace {

/// The two kinds of positive-translation isometry.
enum class TranslationKind { Hyperbolic, Glide };

/// Which closed form applies to a pair (g, h).
enum class FormulaCase { HypHyp, GlideHyp, HypGlide, GlideGlide };

std::string_view to_string(FormulaCase c);
FormulaCase formula_case(TranslationKind g, TranslationKind h);

struct CompositionPrediction {
  /// Predicted |Tr(gh)| / 2.
  double half_trace = 0.0;
  IsometryClass predicted_class;
  FormulaCase formula_case = FormulaCase::HypHyp;
};

/// The closed form alone, without validation or classification.
double half_trace_formula(FormulaCase c, double t_g, double t_h, double theta);

/// Closed-form |Tr(gh)|/2 for isometries whose axes cross at forward angle theta.
///
/// With a = t_g/2 and b = t_h/2:
///   HypHyp     cosh a cosh b + sinh a sinh b cos(theta)
///   GlideHyp   |sinh a cosh b + cosh a sinh b cos(theta)|
///   HypGlide   as GlideHyp with the roles of g and h exchanged
///   GlideGlide |sinh a sinh b + cosh a cosh b cos(theta)|
/// Throws InvalidLength / InvalidAngle on bad input.
CompositionPrediction predict_half_trace(TranslationKind g_kind, double t_g,
                                         TranslationKind h_kind, double t_h, double theta,
                                         double tol = kDefaultTol);

struct OracleReport {
  double predicted = 0.0;
  double actual = 0.0;
  double abs_error = 0.0;
  double theta = 0.0;
  FormulaCase formula_case = FormulaCase::HypHyp;
};

/// Compares predict_half_trace against |Tr(gh)|/2 of the actual product.
/// Throws NotPositiveTranslation or AxesDoNotCross.
OracleReport verify_against_oracle(const Isometry& g, const Isometry& h,
                                   double tol = kDefaultTol);

/// Reference configuration: g's axis is the upward imaginary axis, h's axis
/// passes through i at forward angle theta from it.
struct AxisPair {
  Geodesic g_axis;
  Geodesic h_axis;
};

AxisPair standard_configuration(double theta);

/// Builds make_hyperbolic or make_glide depending on `kind`.
Isometry make_translation(TranslationKind kind, const Geodesic& line, double t);

/// g hyperbolic, h glide with axes crossing at p: the point of axis(g) at
/// distance t_g/2 from p in the direction of g, which lies on the axis of gh.
HPoint predicted_axis_crossing_hyp_glide(const Isometry& g, const Isometry& h, const HPoint& p,
                                         double tol = kDefaultTol);

/// g glide, h hyperbolic with axes crossing at p: the point of axis(h) at
/// distance t_h/2 from p against the direction of h, which lies on the axis of gh.
HPoint predicted_axis_crossing_glide_hyp(const Isometry& g, const Isometry& h, const HPoint& p,
                                         double tol = kDefaultTol);

}  // namespace hyptrace
