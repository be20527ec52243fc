#pragma once

#include <optional>

#include "hyptrace/isometry.hpp"

namespace hyptrace {

/// Oriented complete geodesic of the upper half-plane, running from `from` to `to`.
class Geodesic {
 public:
  /// Throws Error(CoincidentPoints) when the endpoints agree.
  Geodesic(BoundaryPoint from, BoundaryPoint to);

  const BoundaryPoint& from() const { return from_; }
  const BoundaryPoint& to() const { return to_; }

  Geodesic reversed() const { return Geodesic(to_, from_); }

  bool is_vertical() const { return from_.is_infinite() || to_.is_infinite(); }

  /// Same endpoints in the same order, with relative tolerance.
  bool near(const Geodesic& other, double rel_tol = 1e-9) const {
    return from_.near(other.from_, rel_tol) && to_.near(other.to_, rel_tol);
  }

  static Geodesic imaginary_axis() { return {BoundaryPoint(0.0), BoundaryPoint::infinity()}; }

 private:
  BoundaryPoint from_;
  BoundaryPoint to_;
};

/// Transverse crossing of two oriented geodesics.
struct Crossing {
  HPoint point;
  /// Forward angle, in (0, pi).
  double angle = 0.0;
};

/// Orientation-preserving isometry taking the upward imaginary axis onto `line`.
Isometry frame(const Geodesic& line);

/// As frame(line), additionally sending i to `on`, which must lie on `line`.
Isometry frame_at(const Geodesic& line, const HPoint& on);

/// Geodesic through `at` (a point of `base`) whose forward angle from `base` is theta.
Geodesic geodesic_at_angle(const Geodesic& base, const HPoint& at, double theta);

/// Image of an oriented geodesic; orientation follows the endpoints.
Geodesic image(const Isometry& g, const Geodesic& line);

/// Hyperbolic distance from a point to the trace of a geodesic.
double distance_to(const Geodesic& line, const HPoint& p);

/// Oriented from the repelling to the attracting fixed point.
Geodesic axis(const Isometry& g, double tol = kDefaultTol);

/// Mirror of a reflection. Throws Error(NotPositiveTranslation) unless g is a reflection.
Geodesic fixed_geodesic(const Isometry& g, double tol = kDefaultTol);

/// Geodesic through p and q, oriented from p toward q.
Geodesic geodesic_through(const HPoint& p, const HPoint& q);

/// Crossing point and forward angle; nothing for disjoint, asymptotic or equal geodesics.
std::optional<Crossing> intersect(const Geodesic& first, const Geodesic& second);

/// Unsigned angle in (0, pi) from the forward tangent of `first` to that of `second`
/// at a common point. Throws PointNotOnBoth or NotTransverse.
double forward_angle(const Geodesic& first, const Geodesic& second, const HPoint& at);

Isometry reflection_in(const Geodesic& line);

/// Order-two rotation about p.
Isometry half_turn(const HPoint& p);

/// Hyperbolic element with axis `line` (same orientation) and translation length t.
Isometry make_hyperbolic(const Geodesic& line, double t);

/// Glide-reflection along `line` with translation length t: reflection in the
/// line composed with make_hyperbolic(line, t).
Isometry make_glide(const Geodesic& line, double t);

/// Point of `line` at signed arc length s from `start`, positive along the orientation.
HPoint point_along(const Geodesic& line, const HPoint& start, double s);

/// Common perpendicular of two disjoint, non-asymptotic geodesics.
struct Perpendicular {
  /// Oriented from the first geodesic toward the second.
  Geodesic line;
  HPoint foot_on_first;
  HPoint foot_on_second;
  double distance = 0.0;
};

std::optional<Perpendicular> common_perpendicular(const Geodesic& first, const Geodesic& second);

}  // namespace hyptrace
