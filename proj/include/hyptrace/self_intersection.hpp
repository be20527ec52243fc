#pragma once

#include <cstdint>
#include <vector>

#include "hyptrace/isometry.hpp"

namespace hyptrace {

/// Lower bound on the self-intersection number of a closed geodesic alpha that
/// crosses a one-sided closed geodesic beta.
struct SelfIntersectionBound {
  /// Largest m >= 0 with tanh((2m - 1) l_beta / 2) < |cos theta|.
  std::int64_t m_lower = 0;
  /// Entry k - 1 records the inequality at m = k, for k = 1..m_lower.
  std::vector<bool> threshold_satisfied;
};

SelfIntersectionBound bound(double l_beta, double theta);

/// |cos theta| > tanh(l_beta / 2): alpha cannot be simple.
bool is_simple_excluded(double l_beta, double theta);

/// Geometric check of the bound in the universal cover. beta lifts to the
/// upward imaginary axis, the crossing to i, and alpha to the line through i
/// at forward angle theta (or pi - theta when cos theta < 0).
struct LiftReport {
  /// (a) alpha's lift meets the perpendiculars to beta's lift at the
  /// half-integer points (2i - 1)/2, i = 1..m.
  bool crosses_perpendiculars = false;
  /// (b) the lift through the (2i - 1)-th point, as the deck image and as the
  /// mirror image in the perpendicular, crosses alpha's lift at those points.
  bool lifts_cross = false;
  /// (c) forward angles at the crossings are strictly increasing in i.
  bool angles_increasing = false;
  std::vector<HPoint> crossings;
  std::vector<double> angles;
  /// Smallest consecutive angle increase; infinity for fewer than two angles.
  double min_angle_gap = 0.0;

  bool passed() const { return crosses_perpendiculars && lifts_cross && angles_increasing; }
};

/// Requires |cos theta| > tanh((2m - 1) l_beta / 2); throws ConditionNotSatisfied otherwise.
LiftReport lift_crosscheck(double l_beta, double theta, int m);

/// The same construction without the precondition; checks simply fail when the
/// inequality does not hold.
LiftReport lift_geometry(double l_beta, double theta, int m);

}  // namespace hyptrace
