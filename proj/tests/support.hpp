#pragma once

// Random generators and independent oracles shared by the unit and acceptance suites.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hyptrace/geodesic.hpp"
#include "hyptrace/isometry.hpp"
#include "hyptrace/smoothing.hpp"
#include "hyptrace/trace_formulas.hpp"

namespace hyptrace::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  HPoint point() { return {uniform(-3.0, 3.0), uniform(0.2, 3.0)}; }

  /// Endpoints in [-4, 4] at least 0.2 apart; one in ten has an endpoint at infinity.
  Geodesic geodesic() {
    const double x1 = uniform(-4.0, 4.0);
    if (coin(0.1)) {
      const Geodesic v(BoundaryPoint(x1), BoundaryPoint::infinity());
      return coin() ? v : v.reversed();
    }
    const double x2 = x1 + (coin() ? 1.0 : -1.0) * uniform(0.2, 6.0);
    return {BoundaryPoint(x1), BoundaryPoint(x2)};
  }

  /// Moderately conditioned element of PSL2±(R), either determinant sign.
  Isometry conjugator() {
    for (;;) {
      const double a = uniform(-2.0, 2.0), b = uniform(-2.0, 2.0);
      const double c = uniform(-2.0, 2.0), d = uniform(-2.0, 2.0);
      if (std::abs(a * d - b * c) > 0.5) return Isometry::normalize(a, b, c, d);
    }
  }

  double angle(double margin = 0.05) { return uniform(margin, std::numbers::pi - margin); }

  TranslationKind kind() { return coin() ? TranslationKind::Hyperbolic : TranslationKind::Glide; }

 private:
  std::mt19937_64 engine_;
};

/// Raw 2x2 product, entrywise.
inline std::array<double, 4> multiply(const std::array<double, 4>& g, const std::array<double, 4>& h) {
  return {g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * h[3], g[2] * h[0] + g[3] * h[2],
          g[2] * h[1] + g[3] * h[3]};
}

/// The explicit matrices of the reference configuration: g along the upward
/// imaginary axis, h with axis through i at forward angle theta. Built from
/// closed forms only, without the library's constructors.
struct ExplicitPair {
  std::array<double, 4> g;
  std::array<double, 4> h;
};

inline ExplicitPair explicit_pair(TranslationKind g_kind, double t_g, TranslationKind h_kind,
                                  double t_h, double theta) {
  const double eg = std::exp(t_g / 2.0);
  ExplicitPair out;
  out.g = g_kind == TranslationKind::Hyperbolic ? std::array<double, 4>{eg, 0.0, 0.0, 1.0 / eg}
                                                : std::array<double, 4>{eg, 0.0, 0.0, -1.0 / eg};
  const double ch = std::cosh(t_h / 2.0), sh = std::sinh(t_h / 2.0);
  const double c = std::cos(theta), s = std::sin(theta);
  const std::array<double, 4> hyp{ch + sh * c, sh * s, sh * s, ch - sh * c};
  const std::array<double, 4> refl{-c, -s, -s, c};
  out.h = h_kind == TranslationKind::Hyperbolic ? hyp : multiply(refl, hyp);
  return out;
}

inline double half_abs_trace(const std::array<double, 4>& m) { return std::abs(m[0] + m[3]) / 2.0; }

/// Distance from z to the trace of a geodesic, from the Euclidean picture.
inline double distance_to_trace(const Geodesic& line, const HPoint& z) {
  if (line.is_vertical()) {
    const double x0 = line.to().is_infinite() ? line.from().value() : line.to().value();
    return std::asinh(std::abs(z.x - x0) / z.y);
  }
  const double c = (line.from().value() + line.to().value()) / 2.0;
  const double r = std::abs(line.to().value() - line.from().value()) / 2.0;
  const double power = (z.x - c) * (z.x - c) + z.y * z.y - r * r;
  return std::asinh(std::abs(power) / (2.0 * r * z.y));
}

/// Odd m in [-cap, cap] whose smoothing is a puncture loop, by direct evaluation:
/// alpha^m is one-sided of length |m| l_alpha; negative m reverses alpha, turning
/// the forward angle into pi - theta.
inline std::vector<int> scan_puncture_m(double l_alpha, double l_beta, double theta, double tol,
                                        int cap = 99) {
  std::vector<int> out;
  for (int m = -cap; m <= cap; m += 2) {
    const double angle = m > 0 ? theta : std::numbers::pi - theta;
    const double q = puncture_quantity(std::abs(m) * l_alpha, l_beta, angle);
    if (std::abs(q - 1.0) <= tol) out.push_back(m);
  }
  return out;
}

struct PunctureSample {
  double l_alpha;
  double l_beta;
  double theta;
};

/// Random data, and one time in three a configuration built so that a chosen odd
/// power is a puncture loop: fix l_alpha, l_beta and solve the level equation for
/// cos theta. The built power keeps |m| l_alpha / 2 <= 6; beyond that the equation
/// balances terms of size e^12 and the rounded theta no longer solves it to 1e-9.
inline PunctureSample puncture_sample(Rng& rng) {
  const double la = rng.log_uniform(0.05, 5.0);
  const double lb = rng.log_uniform(0.05, 5.0);
  const int k_max = std::min(9, static_cast<int>((12.0 / la - 1.0) / 2.0));
  if (k_max >= 0 && rng.coin(1.0 / 3.0)) {
    const int m = (2 * rng.integer(0, k_max) + 1) * (rng.coin() ? 1 : -1);
    const double a = std::abs(m) * la / 2.0, b = lb / 2.0;
    const double target = rng.coin() ? 1.0 : -1.0;
    const double c = (target - std::sinh(a) * std::sinh(b)) / (std::cosh(a) * std::cosh(b));
    if (std::abs(c) < 0.999) {
      const double angle = std::acos(c);
      return {la, lb, m > 0 ? angle : std::numbers::pi - angle};
    }
  }
  return {la, lb, rng.angle(0.01)};
}

/// Largest m in [0, cap] with tanh((2m - 1) l / 2) < |cos theta|, by linear scan.
inline std::int64_t scan_bound(double l_beta, double theta, std::int64_t cap = 10000) {
  const double c = std::abs(std::cos(theta));
  std::int64_t best = 0;
  for (std::int64_t m = 1; m <= cap; ++m) {
    if (std::tanh((2.0 * m - 1.0) * l_beta / 2.0) < c) best = m;
  }
  return best;
}

}  // namespace hyptrace::testing
