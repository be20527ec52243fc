#include "hyptrace/smoothing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "hyptrace/error.hpp"
#include "hyptrace/trace_formulas.hpp"

namespace hyptrace {

namespace {

void require_length(double l) {
  if (!(l > 0.0) || !std::isfinite(l)) {
    throw Error(ErrorCode::InvalidLength, "curve length must be positive and finite");
  }
}

void require_angle(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw Error(ErrorCode::InvalidAngle, "forward angle must lie in (0, pi)");
  }
}

// With u = e^t, r sinh t + s cosh t = A u + B / u for A = (s + r)/2, B = (s - r)/2,
// so |...| = 1 becomes the pair of quadratics A u^2 -+ u + B = 0 sharing the
// discriminant 1 - 4AB.
std::vector<double> level_crossings(double big_a, double big_b) {
  const double disc = 1.0 - 4.0 * big_a * big_b;
  std::vector<double> ts;
  if (disc < 0.0) return ts;

  for (double sigma : {1.0, -1.0}) {
    const double q = sigma * (1.0 + std::sqrt(disc)) / 2.0;
    std::array<double, 2> roots{big_b / q, big_a != 0.0 ? q / big_a : -1.0};
    for (double u : roots) {
      if (u > 0.0 && std::isfinite(u)) ts.push_back(std::log(u));
    }
  }
  std::sort(ts.begin(), ts.end());
  const auto same = [](double x, double y) {
    return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x));
  };
  ts.erase(std::unique(ts.begin(), ts.end(), same), ts.end());
  return ts;
}

}  // namespace

std::string_view to_string(SmoothingTag tag) {
  switch (tag) {
    case SmoothingTag::Essential: return "essential";
    case SmoothingTag::PunctureLoop: return "puncture_loop";
    case SmoothingTag::SubUnit: return "sub_unit";
  }
  return "unknown";
}

std::string_view to_string(FCase c) {
  switch (c) {
    case FCase::I: return "i";
    case FCase::II: return "ii";
    case FCase::III: return "iii";
    case FCase::IV: return "iv";
    case FCase::V: return "v";
  }
  return "unknown";
}

std::string_view to_string(AngleRelation r) {
  switch (r) {
    case AngleRelation::Greater: return "greater";
    case AngleRelation::Equal: return "equal";
    case AngleRelation::Less: return "less";
    case AngleRelation::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

SmoothingOutcome smooth(const CurveData& alpha, const CurveData& beta, double theta,
                        double tol) {
  require_length(alpha.length);
  require_length(beta.length);
  require_angle(theta);

  const bool alpha_one = alpha.sided == Sidedness::OneSided;
  const bool beta_one = beta.sided == Sidedness::OneSided;
  SmoothingOutcome out;

  if (!alpha_one && !beta_one) {
    const auto p = predict_half_trace(TranslationKind::Hyperbolic, alpha.length,
                                      TranslationKind::Hyperbolic, beta.length, theta, tol);
    out.half_trace = p.half_trace;
    out.tag = SmoothingTag::Essential;
    out.length = 2.0 * std::acosh(std::max(p.half_trace, 1.0));
    return out;
  }

  if (alpha_one != beta_one) {
    // The one-sided curve occupies the glide slot.
    const CurveData& glide = alpha_one ? alpha : beta;
    const CurveData& hyp = alpha_one ? beta : alpha;
    const auto p = predict_half_trace(TranslationKind::Glide, glide.length,
                                      TranslationKind::Hyperbolic, hyp.length, theta, tol);
    out.half_trace = p.half_trace;
    out.tag = SmoothingTag::Essential;
    if (p.predicted_class.kind == IsometryKind::Reflection) {
      out.reflection_degenerate = true;
    } else {
      out.length = p.predicted_class.length;
    }
    return out;
  }

  const double q = puncture_quantity(alpha.length, beta.length, theta);
  out.half_trace = q;
  if (std::abs(q - 1.0) <= tol) {
    out.tag = SmoothingTag::PunctureLoop;
  } else if (q > 1.0) {
    out.tag = SmoothingTag::Essential;
    out.length = 2.0 * std::acosh(q);
  } else {
    out.tag = SmoothingTag::SubUnit;
  }
  return out;
}

double puncture_quantity(double l_alpha, double l_beta, double theta) {
  require_length(l_alpha);
  require_length(l_beta);
  return half_trace_formula(FormulaCase::GlideGlide, l_alpha, l_beta, theta);
}

FCase classify_f_case(double r, double s, double tol) {
  if (s > r + tol) return FCase::I;
  if (std::abs(s - r) <= tol) return FCase::II;
  if (std::abs(s + r) <= tol) return FCase::IV;
  if (s < -r - tol) return FCase::V;
  return FCase::III;
}

std::vector<double> unit_level_crossings(double r, double s) {
  return level_crossings((s + r) / 2.0, (s - r) / 2.0);
}

PunctureSearchResult find_puncture_m(double l_alpha, double l_beta, double theta, double tol,
                                     int m_cap) {
  require_length(l_alpha);
  require_length(l_beta);

  PunctureSearchResult out;
  out.r = std::sinh(l_beta / 2.0);
  out.s = std::cosh(l_beta / 2.0) * std::cos(theta);
  out.f_case = classify_f_case(out.r, out.s, tol);

  // A negative power reverses alpha; the same equation then holds at t = m l_alpha / 2.
  const double half = l_alpha / 2.0;
  // A and B in half-angle form. Near the witnesses of consecutive pairs theta
  // sits close to 0 or pi and s is within a few ulps of -+r, so (s +- r)/2
  // would lose every significant digit.
  const double b = l_beta / 2.0;
  const double cb = std::cosh(b), eb = std::exp(-b);
  const double cos_half = std::cos(theta / 2.0), sin_half = std::sin(theta / 2.0);
  const double big_a = cb * cos_half * cos_half - eb / 2.0;
  const double big_b = eb / 2.0 - cb * sin_half * sin_half;
  for (double t : level_crossings(big_a, big_b)) {
    const double m = t / half;
    if (!(std::abs(m) <= m_cap + 1.0)) continue;
    const double odd = 2.0 * std::round((m - 1.0) / 2.0) + 1.0;
    if (std::abs(odd) > m_cap) continue;
    if (std::abs(m - odd) <= tol * (1.0 + std::abs(m))) out.ms.push_back(static_cast<int>(odd));
  }
  std::sort(out.ms.begin(), out.ms.end());
  out.ms.erase(std::unique(out.ms.begin(), out.ms.end()), out.ms.end());
  return out;
}

AngleRelation expected_angle_relation(int m) {
  if (m % 2 != 0) return AngleRelation::NotApplicable;
  if (m > 0) return AngleRelation::Greater;
  if (m < 0) return AngleRelation::Less;
  return AngleRelation::Equal;
}

AngleRelation consecutive_angle_relation(int m, double l_alpha, double l_beta, double theta,
                                         double tol) {
  if (m % 2 != 0) return AngleRelation::NotApplicable;
  const auto found = find_puncture_m(l_alpha, l_beta, theta, tol);
  if (found.ms != std::vector<int>{m - 1, m + 1}) return AngleRelation::NotApplicable;
  const double offset = theta - std::numbers::pi / 2.0;
  if (std::abs(offset) <= tol) return AngleRelation::Equal;
  return offset > 0 ? AngleRelation::Greater : AngleRelation::Less;
}

std::optional<ConsecutiveWitness> solve_consecutive_pair(int m, double l_alpha) {
  if (m % 2 != 0 || !(l_alpha > 0.0) || !std::isfinite(l_alpha)) return std::nullopt;

  // A e^t + B e^{-t} = sign at t1 = (m-1) l_alpha/2 and t2 = (m+1) l_alpha/2 is a
  // linear system in (A, B) with determinant -2 sinh(l_alpha).
  const double t1 = (m - 1) * l_alpha / 2.0;
  const double t2 = (m + 1) * l_alpha / 2.0;
  const double det = -2.0 * std::sinh(l_alpha);
  constexpr std::array<std::pair<double, double>, 4> kSigns{
      {{-1.0, 1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, -1.0}}};

  for (const auto& [s1, s2] : kSigns) {
    const double big_a = (s1 * std::exp(-t2) - s2 * std::exp(-t1)) / det;
    const double big_b = (s2 * std::exp(t1) - s1 * std::exp(t2)) / det;
    const double r = big_a - big_b;
    if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(big_a + big_b)) continue;
    // r = sinh(b); recover theta from its half-angle forms, which avoid the
    // cancellation in acos(s / cosh b).
    const double cb = std::sqrt(1.0 + r * r);
    const double eb = 1.0 / (cb + r);
    const double sin2 = (eb - 2.0 * big_b) / (2.0 * cb);
    const double cos2 = (eb + 2.0 * big_a) / (2.0 * cb);
    if (!(sin2 > 0.0 && cos2 > 0.0)) continue;

    const ConsecutiveWitness w{2.0 * std::asinh(r), 2.0 * std::atan2(std::sqrt(sin2), std::sqrt(cos2))};
    if (!(w.theta > 0.0 && w.theta < std::numbers::pi)) continue;
    if (find_puncture_m(l_alpha, w.l_beta, w.theta).ms == std::vector<int>{m - 1, m + 1}) {
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace hyptrace
