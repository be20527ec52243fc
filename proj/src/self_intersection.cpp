#include "hyptrace/self_intersection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hyptrace/error.hpp"
#include "hyptrace/geodesic.hpp"

namespace hyptrace {

namespace {

void require_inputs(double l_beta, double theta) {
  if (!(l_beta > 0.0) || !std::isfinite(l_beta)) {
    throw Error(ErrorCode::InvalidLength, "l_beta must be positive and finite");
  }
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw Error(ErrorCode::InvalidAngle, "forward angle must lie in (0, pi)");
  }
}

bool holds(std::int64_t m, double l_beta, double abs_cos) {
  return std::tanh(static_cast<double>(2 * m - 1) * l_beta / 2.0) < abs_cos;
}

}  // namespace

SelfIntersectionBound bound(double l_beta, double theta) {
  require_inputs(l_beta, theta);
  const double abs_cos = std::abs(std::cos(theta));
  const double x = (2.0 * std::atanh(abs_cos) / l_beta + 1.0) / 2.0;
  if (!std::isfinite(x) || x > 1e15) {
    throw Error(ErrorCode::InvalidAngle, "angle too close to 0 or pi for a finite bound");
  }

  std::int64_t m = std::max<std::int64_t>(static_cast<std::int64_t>(std::ceil(x)) - 1, 0);
  while (m > 0 && !holds(m, l_beta, abs_cos)) --m;
  while (holds(m + 1, l_beta, abs_cos)) ++m;

  SelfIntersectionBound out;
  out.m_lower = m;
  out.threshold_satisfied.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 1; k <= m; ++k) out.threshold_satisfied.push_back(holds(k, l_beta, abs_cos));
  return out;
}

bool is_simple_excluded(double l_beta, double theta) {
  require_inputs(l_beta, theta);
  return std::abs(std::cos(theta)) > std::tanh(l_beta / 2.0);
}

LiftReport lift_crosscheck(double l_beta, double theta, int m) {
  require_inputs(l_beta, theta);
  if (m < 1 || !holds(m, l_beta, std::abs(std::cos(theta)))) {
    throw Error(ErrorCode::ConditionNotSatisfied,
                "|cos theta| > tanh((2m - 1) l_beta / 2) does not hold");
  }
  return lift_geometry(l_beta, theta, m);
}

LiftReport lift_geometry(double l_beta, double theta, int m) {
  require_inputs(l_beta, theta);
  if (std::cos(theta) < 0.0) theta = std::numbers::pi - theta;

  const HPoint base_point{0.0, 1.0};
  const Geodesic beta = Geodesic::imaginary_axis();
  const Geodesic alpha = geodesic_at_angle(beta, base_point, theta);
  // Deck transformation of the one-sided beta, moving against its direction.
  const Isometry deck = make_glide(beta.reversed(), l_beta);

  LiftReport report;
  report.crosses_perpendiculars = true;
  report.lifts_cross = true;
  report.min_angle_gap = std::numeric_limits<double>::infinity();

  Isometry deck_power = deck;
  for (int i = 1; i <= m; ++i) {
    if (i > 1) deck_power = compose(deck, compose(deck, deck_power));
    const int k = 2 * i - 1;
    const HPoint half_point = point_along(beta, base_point, -k * l_beta / 2.0);
    const Geodesic perpendicular = geodesic_at_angle(beta, half_point, std::numbers::pi / 2.0);

    const auto foot = intersect(alpha, perpendicular);
    if (!foot) {
      report.crosses_perpendiculars = false;
      report.lifts_cross = false;
      break;
    }
    report.crossings.push_back(foot->point);

    const Geodesic lift = image(deck_power, alpha);
    const Geodesic mirrored = image(reflection_in(perpendicular), alpha);
    const auto meet = intersect(alpha, lift);
    if (!meet || !mirrored.reversed().near(lift, 1e-8) ||
        hyp_distance(meet->point, foot->point) > 1e-8) {
      report.lifts_cross = false;
      break;
    }
    if (!report.angles.empty()) {
      report.min_angle_gap = std::min(report.min_angle_gap, meet->angle - report.angles.back());
    }
    report.angles.push_back(meet->angle);
  }
  report.angles_increasing = report.lifts_cross && report.min_angle_gap > 0.0;
  return report;
}

}  // namespace hyptrace
