#include "hyptrace/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyptrace/error.hpp"

namespace hyptrace {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Denominators below this fraction of the largest entry make a ratio infinite.
constexpr double kNegligible = 64.0 * kEps;

// Sign choice: a trace this small relative to the entries is rounding noise of a
// trace-free element (reflection, half-turn, products of them), so the sign is
// taken from a, b, c instead. Otherwise the representative would flip at random.
constexpr double kSignCutoff = 1e-10;

double max_abs(double a, double b, double c, double d) {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

// num/den on the extended line; `scale` sets what counts as a vanishing denominator.
BoundaryPoint ratio(double num, double den, double scale) {
  if (std::abs(den) <= kNegligible * scale) return BoundaryPoint::infinity();
  return BoundaryPoint(num / den);
}

}  // namespace

bool BoundaryPoint::near(const BoundaryPoint& other, double rel_tol) const {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  return std::abs(x_ - other.x_) <= rel_tol * std::max({1.0, std::abs(x_), std::abs(other.x_)});
}

Isometry Isometry::normalize(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(std::abs(det) > 1e-12) || !std::isfinite(det)) {
    throw Error(ErrorCode::SingularMatrix, "matrix determinant is zero or not finite");
  }
  const double s = 1.0 / std::sqrt(std::abs(det));
  return from_unimodular(a * s, b * s, c * s, d * s, det > 0 ? 1 : -1);
}

Isometry Isometry::from_unimodular(double a, double b, double c, double d, int det_sign) {
  const double cutoff = kSignCutoff * max_abs(a, b, c, d);
  for (double lead : {a + d, a, b, c}) {
    if (std::abs(lead) > cutoff) {
      if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
      }
      break;
    }
  }
  return Isometry(a, b, c, d, det_sign);
}

Isometry Isometry::inverse() const { return from_unimodular(d_, -b_, -c_, a_, det_); }

double Isometry::distance_to(const Isometry& other) const {
  return max_abs(a_ - other.a_, b_ - other.b_, c_ - other.c_, d_ - other.d_);
}

Isometry compose(const Isometry& g, const Isometry& h) {
  return Isometry::from_unimodular(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
                                   g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d(),
                                   g.det() * h.det());
}

std::string_view to_string(IsometryKind kind) {
  switch (kind) {
    case IsometryKind::Identity: return "identity";
    case IsometryKind::Elliptic: return "elliptic";
    case IsometryKind::Parabolic: return "parabolic";
    case IsometryKind::Hyperbolic: return "hyperbolic";
    case IsometryKind::Reflection: return "reflection";
    case IsometryKind::GlideReflection: return "glide_reflection";
  }
  return "unknown";
}

std::optional<IsometryKind> kind_from_string(std::string_view name) {
  for (auto k : {IsometryKind::Identity, IsometryKind::Elliptic, IsometryKind::Parabolic,
                 IsometryKind::Hyperbolic, IsometryKind::Reflection,
                 IsometryKind::GlideReflection}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

IsometryClass classify(const Isometry& g, double tol) {
  const double abs_trace = std::abs(g.trace());
  if (g.det() > 0) {
    if (std::abs(g.a() - 1.0) <= tol && std::abs(g.d() - 1.0) <= tol && std::abs(g.b()) <= tol &&
        std::abs(g.c()) <= tol) {
      return {IsometryKind::Identity, std::nullopt};
    }
    if (abs_trace < 2.0 - tol) return {IsometryKind::Elliptic, std::nullopt};
    if (abs_trace <= 2.0 + tol) return {IsometryKind::Parabolic, std::nullopt};
    // sinh(t/2) = sqrt(Tr^2 - 4) / 2; the entrywise discriminant keeps small t accurate.
    const double half_sinh = std::sqrt(std::max(g.discriminant(), 0.0)) / 2.0;
    return {IsometryKind::Hyperbolic, 2.0 * std::asinh(half_sinh)};
  }
  if (abs_trace <= tol) return {IsometryKind::Reflection, std::nullopt};
  return {IsometryKind::GlideReflection, 2.0 * std::asinh(abs_trace / 2.0)};
}

bool has_positive_translation(const Isometry& g, double tol) {
  const auto kind = classify(g, tol).kind;
  return kind == IsometryKind::Hyperbolic || kind == IsometryKind::GlideReflection;
}

double translation_length(const Isometry& g, double tol) {
  const auto cls = classify(g, tol);
  if (!cls.length) {
    throw Error(ErrorCode::NotPositiveTranslation,
                std::string("isometry is ") + std::string(to_string(cls.kind)) +
                    ", not hyperbolic or glide_reflection");
  }
  return *cls.length;
}

FixedPoints fixed_boundary_points(const Isometry& g, double tol) {
  if (!has_positive_translation(g, tol)) {
    throw Error(ErrorCode::NotPositiveTranslation,
                "fixed boundary points need a hyperbolic element or glide-reflection");
  }
  // Eigenvalues of the matrix; the eigenvector (x, 1) of eigenvalue lambda is the
  // boundary fixed point x, attracting exactly when |lambda| > 1.
  const double tr = g.trace();
  const double root = std::sqrt(std::max(g.discriminant(), 0.0));
  const double sign = tr < 0 ? -1.0 : 1.0;
  const double lambda_attr = sign * (std::abs(tr) + root) / 2.0;
  const double lambda_rep = g.det() / lambda_attr;

  return {eigen_boundary_point(g, lambda_rep), eigen_boundary_point(g, lambda_attr)};
}

BoundaryPoint eigen_boundary_point(const Isometry& g, double eigenvalue) {
  // Kernel of [[a - lambda, b], [c, d - lambda]] is spanned by (b, lambda - a)
  // and by (lambda - d, c); take whichever is numerically larger.
  const double u0 = g.b(), u1 = eigenvalue - g.a();
  const double w0 = eigenvalue - g.d(), w1 = g.c();
  if (std::hypot(u0, u1) >= std::hypot(w0, w1)) return ratio(u0, u1, std::abs(u0));
  return ratio(w0, w1, std::abs(w0));
}

BoundaryPoint apply(const Isometry& g, const BoundaryPoint& x) {
  const double scale = max_abs(g.a(), g.b(), g.c(), g.d());
  if (x.is_infinite()) return ratio(g.a(), g.c(), scale);
  const double num = g.a() * x.value() + g.b();
  const double den = g.c() * x.value() + g.d();
  return ratio(num, den, std::max(std::abs(num), kEps * scale));
}

HPoint apply(const Isometry& g, const HPoint& p) {
  std::complex<double> z = p.as_complex();
  if (g.det() < 0) z = std::conj(z);
  const std::complex<double> w = (g.a() * z + g.b()) / (g.c() * z + g.d());
  // Im w = y / |cz + d|^2 exactly; recomputing keeps it strictly positive.
  const double y = p.y / std::norm(g.c() * z + g.d());
  return {w.real(), y};
}

double hyp_distance(const HPoint& p, const HPoint& q) {
  const double chord = std::hypot(p.x - q.x, p.y - q.y);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y * q.y)));
}

double displacement(const Isometry& g, const HPoint& p) { return hyp_distance(p, apply(g, p)); }

}  // namespace hyptrace
