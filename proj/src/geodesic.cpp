#include "hyptrace/geodesic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hyptrace/error.hpp"

namespace hyptrace {

namespace {

// Hyperbolic distance within which a point counts as lying on a geodesic.
constexpr double kOnTrace = 1e-8;

// Below this sine the two tangents are considered parallel.
constexpr double kMinSine = 1e-12;

using Matrix = std::array<double, 4>;

// Trace-free involution with eigenvalue +1 at `to` and -1 at `from`. As a det -1
// matrix it is the reflection in the line; cosh(t/2) I + sinh(t/2) N translates
// along it toward `to`.
Matrix axis_involution(const Geodesic& line) {
  const auto& p = line.from();
  const auto& q = line.to();
  if (q.is_infinite()) return {1.0, -2.0 * p.value(), 0.0, -1.0};
  if (p.is_infinite()) return {-1.0, 2.0 * q.value(), 0.0, 1.0};
  const double x1 = p.value(), x2 = q.value();
  const double w = x2 - x1;
  const double n11 = (x1 + x2) / w;
  return {n11, -2.0 * x1 * x2 / w, 2.0 / w, -n11};
}

// Euclidean tangent direction of the oriented line at a point on it.
std::array<double, 2> tangent(const Geodesic& line, const HPoint& at) {
  if (line.to().is_infinite()) return {0.0, 1.0};
  if (line.from().is_infinite()) return {0.0, -1.0};
  const double x1 = line.from().value(), x2 = line.to().value();
  const double center = (x1 + x2) / 2.0;
  if (x2 > x1) return {at.y, center - at.x};
  return {-at.y, at.x - center};
}

void require_length(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::InvalidLength, "translation length must be positive and finite");
  }
}

}  // namespace

Geodesic::Geodesic(BoundaryPoint from, BoundaryPoint to) : from_(from), to_(to) {
  if (from_ == to_) throw Error(ErrorCode::CoincidentPoints, "geodesic endpoints coincide");
}

Isometry frame(const Geodesic& line) {
  const auto& p = line.from();
  const auto& q = line.to();
  if (q.is_infinite()) return Isometry::normalize(1.0, p.value(), 0.0, 1.0);
  if (p.is_infinite()) return Isometry::normalize(q.value(), -1.0, 1.0, 0.0);
  const double x1 = p.value(), x2 = q.value();
  if (x2 > x1) return Isometry::normalize(x2, x1, 1.0, 1.0);
  return Isometry::normalize(-x2, x1, -1.0, 1.0);
}

Isometry frame_at(const Geodesic& line, const HPoint& on) {
  const Isometry base = frame(line);
  const HPoint w = apply(base.inverse(), on);
  const double r = std::sqrt(std::hypot(w.x, w.y));
  return compose(base, Isometry::normalize(r, 0.0, 0.0, 1.0 / r));
}

Geodesic geodesic_at_angle(const Geodesic& base, const HPoint& at, double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw Error(ErrorCode::InvalidAngle, "angle must lie in (0, pi)");
  }
  if (distance_to(base, at) > kOnTrace) {
    throw Error(ErrorCode::PointNotOnGeodesic, "point is not on the base geodesic");
  }
  // Through i, the line from -tan(theta/2) to cot(theta/2) meets the upward
  // imaginary axis at forward angle theta.
  const Geodesic local(BoundaryPoint(-std::tan(theta / 2.0)),
                       BoundaryPoint(1.0 / std::tan(theta / 2.0)));
  return image(frame_at(base, at), local);
}

Geodesic image(const Isometry& g, const Geodesic& line) {
  return {apply(g, line.from()), apply(g, line.to())};
}

double distance_to(const Geodesic& line, const HPoint& p) {
  const HPoint w = apply(frame(line).inverse(), p);
  return std::asinh(std::abs(w.x) / w.y);
}

Geodesic axis(const Isometry& g, double tol) {
  const auto fixed = fixed_boundary_points(g, tol);
  return {fixed.repelling, fixed.attracting};
}

Geodesic fixed_geodesic(const Isometry& g, double tol) {
  if (classify(g, tol).kind != IsometryKind::Reflection) {
    throw Error(ErrorCode::NotPositiveTranslation, "isometry is not a reflection");
  }
  return {eigen_boundary_point(g, -1.0), eigen_boundary_point(g, 1.0)};
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
  if (!(hyp_distance(p, q) > 1e-14)) {
    throw Error(ErrorCode::CoincidentPoints, "points coincide");
  }
  // Work with p moved to i by z -> (z - px)/py.
  const double sp = std::sqrt(p.y);
  const Isometry to_p = Isometry::normalize(sp, p.x / sp, 0.0, 1.0 / sp);
  const HPoint w = apply(to_p.inverse(), q);
  Geodesic local = Geodesic::imaginary_axis();
  const double center = (w.x * w.x + w.y * w.y - 1.0) / (2.0 * w.x);
  if (w.x == 0.0 || !(std::abs(center) < 1e15)) {
    if (w.y < 1.0) local = local.reversed();
  } else {
    // Endpoints of the circle through i have product -1.
    const double far = center + std::copysign(std::sqrt(1.0 + center * center), center);
    const double near = -1.0 / far;
    const double left = std::min(far, near), right = std::max(far, near);
    local = w.x > 0 ? Geodesic(BoundaryPoint(left), BoundaryPoint(right))
                    : Geodesic(BoundaryPoint(right), BoundaryPoint(left));
  }
  return image(to_p, local);
}

std::optional<Crossing> intersect(const Geodesic& first, const Geodesic& second) {
  for (const auto& a : {first.from(), first.to()}) {
    for (const auto& b : {second.from(), second.to()}) {
      if (a.near(b, 1e-12)) return std::nullopt;
    }
  }
  const Isometry m = frame(first);
  const Geodesic local = image(m.inverse(), second);
  const auto& u = local.from();
  const auto& v = local.to();
  if (u.is_infinite() || v.is_infinite()) return std::nullopt;
  const double product = u.value() * v.value();
  if (!(product < 0.0)) return std::nullopt;

  // In the frame the first line is the upward imaginary axis; the second is a
  // semicircle crossing it at i*rho.
  const double rho = std::sqrt(-product);
  const double center = (u.value() + v.value()) / 2.0;
  const double dir_x = v.value() > u.value() ? rho : -rho;
  const double dir_y = v.value() > u.value() ? center : -center;
  const double angle = std::atan2(std::abs(dir_x), dir_y);
  return Crossing{apply(m, HPoint{0.0, rho}), angle};
}

double forward_angle(const Geodesic& first, const Geodesic& second, const HPoint& at) {
  if (distance_to(first, at) > kOnTrace || distance_to(second, at) > kOnTrace) {
    throw Error(ErrorCode::PointNotOnBoth, "point does not lie on both geodesics");
  }
  const auto s = tangent(first, at);
  const auto t = tangent(second, at);
  const double cross = s[0] * t[1] - s[1] * t[0];
  const double dot = s[0] * t[0] + s[1] * t[1];
  if (std::abs(cross) <= kMinSine * std::hypot(s[0], s[1]) * std::hypot(t[0], t[1])) {
    throw Error(ErrorCode::NotTransverse, "geodesics are tangent at the point");
  }
  return std::atan2(std::abs(cross), dot);
}

Isometry reflection_in(const Geodesic& line) {
  const Matrix n = axis_involution(line);
  return Isometry::from_unimodular(n[0], n[1], n[2], n[3], -1);
}

Isometry half_turn(const HPoint& p) {
  return Isometry::from_unimodular(-p.x / p.y, (p.x * p.x + p.y * p.y) / p.y, -1.0 / p.y, p.x / p.y,
                                   1);
}

Isometry make_hyperbolic(const Geodesic& line, double t) {
  require_length(t);
  const Matrix n = axis_involution(line);
  const double ch = std::cosh(t / 2.0), sh = std::sinh(t / 2.0);
  return Isometry::from_unimodular(ch + sh * n[0], sh * n[1], sh * n[2], ch + sh * n[3], 1);
}

Isometry make_glide(const Geodesic& line, double t) {
  require_length(t);
  const Matrix n = axis_involution(line);
  const double ch = std::cosh(t / 2.0), sh = std::sinh(t / 2.0);
  return Isometry::from_unimodular(sh + ch * n[0], ch * n[1], ch * n[2], sh + ch * n[3], -1);
}

HPoint point_along(const Geodesic& line, const HPoint& start, double s) {
  if (distance_to(line, start) > kOnTrace) {
    throw Error(ErrorCode::PointNotOnGeodesic, "start point is not on the geodesic");
  }
  return apply(frame_at(line, start), HPoint{0.0, std::exp(s)});
}

std::optional<Perpendicular> common_perpendicular(const Geodesic& first,
                                                  const Geodesic& second) {
  for (const auto& a : {first.from(), first.to()}) {
    for (const auto& b : {second.from(), second.to()}) {
      if (a.near(b, 1e-12)) return std::nullopt;
    }
  }
  const Isometry m = frame(first);
  const Geodesic local = image(m.inverse(), second);
  if (local.from().is_infinite() || local.to().is_infinite()) return std::nullopt;
  const double u = local.from().value(), v = local.to().value();
  if (!(u * v > 0.0)) return std::nullopt;

  // The perpendicular is the circle |z| = rho about the origin.
  const double rho = std::sqrt(u * v);
  const double side = u > 0 ? 1.0 : -1.0;
  const Geodesic perp_local(BoundaryPoint(-side * rho), BoundaryPoint(side * rho));
  const double center = (u + v) / 2.0;
  const double foot_x = rho * rho / center;
  const HPoint foot2{foot_x, std::sqrt((rho - foot_x) * (rho + foot_x))};

  const double lo = std::sqrt(std::min(std::abs(u), std::abs(v)));
  const double hi = std::sqrt(std::max(std::abs(u), std::abs(v)));
  return Perpendicular{image(m, perp_local), apply(m, HPoint{0.0, rho}), apply(m, foot2),
                       std::log((hi + lo) / (hi - lo))};
}

}  // namespace hyptrace
