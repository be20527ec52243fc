#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <utility>

namespace hyptrace {

inline constexpr double kDefaultTol = 1e-9;

/// Point of the open upper half-plane.
struct HPoint {
  double x = 0.0;
  double y = 1.0;

  std::complex<double> as_complex() const { return {x, y}; }
};

/// A point of the real line or the point at infinity.
class BoundaryPoint {
 public:
  constexpr BoundaryPoint() = default;
  constexpr explicit BoundaryPoint(double x) : x_(x) {}

  static constexpr BoundaryPoint infinity() {
    BoundaryPoint p;
    p.infinite_ = true;
    return p;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite coordinate; meaningless when is_infinite().
  constexpr double value() const { return x_; }

  /// Equality with relative tolerance on finite values.
  bool near(const BoundaryPoint& other, double rel_tol = 1e-12) const;

  friend constexpr bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.x_ == b.x_);
  }

 private:
  double x_ = 0.0;
  bool infinite_ = false;
};

/// Element of PSL2±(R), stored as a canonical representative with |det| = 1.
///
/// Orientation-reversing elements (det = -1) act by z -> (a conj(z) + b) / (c conj(z) + d).
/// The representative is fixed by requiring the first entry of (a + d, a, b, c)
/// that is not negligible to be positive.
class Isometry {
 public:
  /// Identity.
  Isometry() = default;

  /// Scales [[a, b], [c, d]] to unit |det| and canonicalizes the sign.
  /// Throws Error(SingularMatrix) when |det| <= 1e-12.
  static Isometry normalize(double a, double b, double c, double d);
  static Isometry normalize(const std::array<std::array<double, 2>, 2>& m) {
    return normalize(m[0][0], m[0][1], m[1][0], m[1][1]);
  }
  /// For entries already known to have determinant `det_sign` (+1 or -1) up to
  /// rounding: only the sign is canonicalized. Recomputing ad - bc for large
  /// entries cancels badly, so exact constructions and products go through here.
  static Isometry from_unimodular(double a, double b, double c, double d, int det_sign);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  int det() const { return det_; }
  double trace() const { return a_ + d_; }

  /// (a - d)^2 + 4bc, equal to Tr^2 - 4 det. Computed from entries so that it
  /// does not suffer the cancellation of Tr^2 - 4 near the parabolic boundary.
  double discriminant() const { return (a_ - d_) * (a_ - d_) + 4.0 * b_ * c_; }

  std::array<std::array<double, 2>, 2> matrix() const { return {{{a_, b_}, {c_, d_}}}; }

  Isometry inverse() const;

  /// Largest entrywise difference to `other` in canonical form.
  double distance_to(const Isometry& other) const;

 private:
  Isometry(double a, double b, double c, double d, int det)
      : a_(a), b_(b), c_(c), d_(d), det_(det) {}

  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
  int det_ = 1;
};

/// Matrix product g * h (apply h first), renormalized.
Isometry compose(const Isometry& g, const Isometry& h);

enum class IsometryKind { Identity, Elliptic, Parabolic, Hyperbolic, Reflection, GlideReflection };

std::string_view to_string(IsometryKind kind);
std::optional<IsometryKind> kind_from_string(std::string_view name);

struct IsometryClass {
  IsometryKind kind = IsometryKind::Identity;
  /// Translation length; present iff kind is Hyperbolic or GlideReflection.
  std::optional<double> length;
};

IsometryClass classify(const Isometry& g, double tol = kDefaultTol);

/// True for hyperbolic elements and glide-reflections.
bool has_positive_translation(const Isometry& g, double tol = kDefaultTol);

/// t_g with |Tr g| = 2 cosh(t_g/2) (hyperbolic) or 2 sinh(t_g/2) (glide).
/// Throws Error(NotPositiveTranslation) for every other class.
double translation_length(const Isometry& g, double tol = kDefaultTol);

struct FixedPoints {
  BoundaryPoint repelling;
  BoundaryPoint attracting;
};

/// Boundary fixed points of a hyperbolic element or glide-reflection.
FixedPoints fixed_boundary_points(const Isometry& g, double tol = kDefaultTol);

/// Boundary point spanned by an eigenvector of the matrix for `eigenvalue`.
BoundaryPoint eigen_boundary_point(const Isometry& g, double eigenvalue);

/// Image of a boundary point under the boundary action x -> (ax + b)/(cx + d).
BoundaryPoint apply(const Isometry& g, const BoundaryPoint& x);

HPoint apply(const Isometry& g, const HPoint& p);

double hyp_distance(const HPoint& p, const HPoint& q);

/// d(p, g p).
double displacement(const Isometry& g, const HPoint& p);

}  // namespace hyptrace
