#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hyptrace/error.hpp"
#include "hyptrace/isometry.hpp"
#include "support.hpp"

using namespace hyptrace;
using hyptrace::testing::Rng;

namespace {

void expect_matrix(const Isometry& g, double a, double b, double c, double d, double tol = 1e-14) {
  EXPECT_NEAR(g.a(), a, tol);
  EXPECT_NEAR(g.b(), b, tol);
  EXPECT_NEAR(g.c(), c, tol);
  EXPECT_NEAR(g.d(), d, tol);
}

const double kHalfE = std::exp(0.5);

}  // namespace

TEST(Normalize, ScalarMultipleOfIdentity) {
  const auto g = Isometry::normalize(2, 0, 0, 2);
  expect_matrix(g, 1, 0, 0, 1);
  EXPECT_EQ(g.det(), 1);
}

TEST(Normalize, ReflectionKeepsPositiveA) {
  const auto g = Isometry::normalize(1, 0, 0, -1);
  expect_matrix(g, 1, 0, 0, -1);
  EXPECT_EQ(g.det(), -1);
}

TEST(Normalize, ProjectiveSignRule) {
  expect_matrix(Isometry::normalize(-3, 0, 0, -3), 1, 0, 0, 1);
  // Trace zero: the sign is fixed by a, then b.
  expect_matrix(Isometry::normalize(0, -1, 1, 0), 0, 1, -1, 0);
}

TEST(Normalize, RejectsSingular) {
  try {
    Isometry::normalize(1, 2, 2, 4);
    FAIL() << "expected SingularMatrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(Normalize, IdempotentAndSignInvariant) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto g = rng.conjugator();
    const auto again = Isometry::normalize(g.a(), g.b(), g.c(), g.d());
    const auto flipped = Isometry::normalize(-g.a(), -g.b(), -g.c(), -g.d());
    EXPECT_LT(g.distance_to(again), 1e-14);
    EXPECT_LT(g.distance_to(flipped), 1e-14);
    EXPECT_NEAR(std::abs(g.a() * g.d() - g.b() * g.c()), 1.0, 1e-12);
  }
}

TEST(Compose, IdentityAndInverseLaws) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto h = rng.conjugator();
    EXPECT_LT(compose(Isometry(), h).distance_to(h), 1e-14);
    EXPECT_EQ(classify(compose(h, h.inverse())).kind, IsometryKind::Identity);
  }
}

TEST(Compose, GlideTimesReflectionMatchesHandProduct) {
  const auto g = Isometry::normalize(kHalfE, 0, 0, -1.0 / kHalfE);
  const auto rho = Isometry::normalize(-1, 0, 0, 1);
  // Entrywise: diag(e^{1/2}, -e^{-1/2}) * diag(-1, 1) = diag(-e^{1/2}, -e^{-1/2}).
  const auto expected = hyptrace::testing::multiply({kHalfE, 0, 0, -1.0 / kHalfE}, {-1, 0, 0, 1});
  const auto product = compose(g, rho);
  EXPECT_EQ(product.det(), 1);
  EXPECT_NEAR(std::abs(product.trace()), std::abs(expected[0] + expected[3]), 1e-14);
  EXPECT_NEAR(std::abs(product.trace()), 2.0 * std::cosh(0.5), 1e-14);
}

TEST(Compose, TraceCyclicity) {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    const auto g = rng.conjugator();
    const auto h = rng.conjugator();
    const double gh = std::abs(compose(g, h).trace());
    const double hg = std::abs(compose(h, g).trace());
    EXPECT_LE(std::abs(gh - hg), 1e-10 * std::max(1.0, gh));
  }
}

TEST(Classify, PaperExamples) {
  EXPECT_EQ(classify(Isometry::normalize(1, 1, 0, 1)).kind, IsometryKind::Parabolic);

  const auto hyp = classify(Isometry::normalize(2, 0, 0, 0.5));
  EXPECT_EQ(hyp.kind, IsometryKind::Hyperbolic);
  EXPECT_NEAR(*hyp.length, 2.0 * std::log(2.0), 1e-14);

  const auto glide = classify(Isometry::normalize(kHalfE, 0, 0, -1.0 / kHalfE));
  EXPECT_EQ(glide.kind, IsometryKind::GlideReflection);
  EXPECT_NEAR(*glide.length, 1.0, 1e-14);

  const auto refl = classify(Isometry::normalize(1, 0, 0, -1));
  EXPECT_EQ(refl.kind, IsometryKind::Reflection);
  EXPECT_FALSE(refl.length.has_value());
}

TEST(Classify, IdentityAndElliptic) {
  EXPECT_EQ(classify(Isometry()).kind, IsometryKind::Identity);
  EXPECT_EQ(classify(Isometry::normalize(0, 1, -1, 0)).kind, IsometryKind::Elliptic);
  const double c = std::cos(0.3), s = std::sin(0.3);
  EXPECT_EQ(classify(Isometry::normalize(c, s, -s, c)).kind, IsometryKind::Elliptic);
}

TEST(Classify, ParabolicBandFollowsTolerance) {
  // Trace 2 + 1e-7 is parabolic at tol 1e-6 and hyperbolic at the default.
  const double eps = 1e-7;
  const auto g = Isometry::normalize(1.0 + eps, 1.0, eps, 1.0);
  EXPECT_EQ(classify(g, 1e-6).kind, IsometryKind::Parabolic);
  EXPECT_EQ(classify(g).kind, IsometryKind::Hyperbolic);
}

TEST(Classify, StableUnderRenormalizationAndSignFlip) {
  Rng rng(14);
  for (int i = 0; i < 10000; ++i) {
    const auto g = rng.conjugator();
    const auto renorm = Isometry::normalize(3.0 * g.a(), 3.0 * g.b(), 3.0 * g.c(), 3.0 * g.d());
    const auto flip = Isometry::normalize(-g.a(), -g.b(), -g.c(), -g.d());
    const auto k = classify(g).kind;
    EXPECT_EQ(classify(renorm).kind, k);
    EXPECT_EQ(classify(flip).kind, k);
  }
}

TEST(TranslationLength, NormalForms) {
  EXPECT_NEAR(translation_length(Isometry::normalize(std::exp(1.0), 0, 0, std::exp(-1.0))), 2.0, 1e-14);
  EXPECT_NEAR(translation_length(Isometry::normalize(std::exp(1.5), 0, 0, -std::exp(-1.5))), 3.0, 1e-14);
}

TEST(TranslationLength, ConjugationInvariant) {
  Rng rng(15);
  const auto d = Isometry::normalize(std::exp(1.0), 0, 0, std::exp(-1.0));
  for (int i = 0; i < 500; ++i) {
    const auto u = rng.conjugator();
    EXPECT_NEAR(translation_length(compose(u, compose(d, u.inverse()))), 2.0, 1e-11);
  }
}

TEST(TranslationLength, RejectsNonTranslations) {
  for (const auto& g : {Isometry(), Isometry::normalize(1, 1, 0, 1), Isometry::normalize(0, 1, -1, 0),
                        Isometry::normalize(1, 0, 0, -1)}) {
    try {
      translation_length(g);
      FAIL() << "expected NotPositiveTranslation";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotPositiveTranslation);
    }
  }
}

TEST(FixedPoints, DiagonalForms) {
  auto fp = fixed_boundary_points(Isometry::normalize(2, 0, 0, 0.5));
  EXPECT_EQ(fp.repelling, BoundaryPoint(0.0));
  EXPECT_TRUE(fp.attracting.is_infinite());

  fp = fixed_boundary_points(Isometry::normalize(kHalfE, 0, 0, -1.0 / kHalfE));
  EXPECT_EQ(fp.repelling, BoundaryPoint(0.0));
  EXPECT_TRUE(fp.attracting.is_infinite());

  fp = fixed_boundary_points(Isometry::normalize(0.5, 0, 0, 2));
  EXPECT_TRUE(fp.repelling.is_infinite());
  EXPECT_EQ(fp.attracting, BoundaryPoint(0.0));
}

TEST(FixedPoints, ExplicitMatrixWithCotCscRoots) {
  const double t = 1.3, theta = 1.1;
  const double p = std::cosh(t / 2) + std::sinh(t / 2) * std::cos(theta);
  const double q = std::sinh(t / 2) * std::sin(theta);
  const double s = std::cosh(t / 2) - std::sinh(t / 2) * std::cos(theta);
  const auto fp = fixed_boundary_points(Isometry::normalize(p, q, q, s));
  const double cot = 1.0 / std::tan(theta), csc = 1.0 / std::sin(theta);
  EXPECT_NEAR(fp.attracting.value(), cot + csc, 1e-12);
  EXPECT_NEAR(fp.repelling.value(), cot - csc, 1e-12);
}

TEST(FixedPoints, AreFixedByBoundaryAction) {
  Rng rng(16);
  for (int i = 0; i < 2000; ++i) {
    const auto line = rng.geodesic();
    const double t = rng.uniform(0.05, 8.0);
    const auto g = rng.coin() ? hyptrace::make_hyperbolic(line, t) : hyptrace::make_glide(line, t);
    const auto fp = fixed_boundary_points(g);
    EXPECT_TRUE(apply(g, fp.repelling).near(fp.repelling, 1e-10));
    EXPECT_TRUE(apply(g, fp.attracting).near(fp.attracting, 1e-10));
    EXPECT_TRUE(fp.attracting.near(line.to(), 1e-10));
  }
}

TEST(Apply, Examples) {
  auto p = apply(Isometry(), HPoint{0, 1});
  EXPECT_DOUBLE_EQ(p.x, 0);
  EXPECT_DOUBLE_EQ(p.y, 1);
  p = apply(Isometry::normalize(2, 0, 0, 0.5), HPoint{0, 1});
  EXPECT_NEAR(p.x, 0, 1e-15);
  EXPECT_NEAR(p.y, 4, 1e-14);
  p = apply(Isometry::normalize(1, 0, 0, -1), HPoint{1, 1});
  EXPECT_NEAR(p.x, -1, 1e-15);
  EXPECT_NEAR(p.y, 1, 1e-15);
}

TEST(Apply, StaysInUpperHalfPlane) {
  Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    EXPECT_GT(apply(rng.conjugator(), rng.point()).y, 0.0);
  }
}

TEST(Distance, VerticalArcLength) {
  EXPECT_DOUBLE_EQ(hyp_distance({0, 1}, {0, 1}), 0.0);
  EXPECT_NEAR(hyp_distance({0, 1}, {0, std::exp(1.0)}), 1.0, 1e-15);
  EXPECT_NEAR(hyp_distance({0, 1}, {0, std::exp(2.0)}), 2.0, 1e-15);
}

TEST(Distance, MetricAxiomsAndIsometryInvariance) {
  Rng rng(18);
  for (int i = 0; i < 2000; ++i) {
    const auto p = rng.point(), q = rng.point(), r = rng.point();
    EXPECT_NEAR(hyp_distance(p, q), hyp_distance(q, p), 1e-14);
    EXPECT_LE(hyp_distance(p, r), hyp_distance(p, q) + hyp_distance(q, r) + 1e-12);
    const auto g = rng.conjugator();
    EXPECT_NEAR(hyp_distance(apply(g, p), apply(g, q)), hyp_distance(p, q), 1e-9);
  }
}

TEST(Displacement, Examples) {
  EXPECT_DOUBLE_EQ(displacement(Isometry(), {0.3, 0.7}), 0.0);
  const auto g = Isometry::normalize(2, 0, 0, 0.5);
  EXPECT_NEAR(displacement(g, {0, 1}), 2.0 * std::log(2.0), 1e-14);
  // (1, 1) -> (4, 4): cosh d = 1 + 18 / 8.
  EXPECT_NEAR(displacement(g, {1, 1}), 1.84724608571383784, 1e-14);
  EXPECT_GT(displacement(g, {1, 1}), 2.0 * std::log(2.0));
}

TEST(Displacement, BoundedBelowByTranslationLength) {
  Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    const auto line = rng.geodesic();
    const double t = rng.uniform(0.1, 5.0);
    const auto g = rng.coin() ? hyptrace::make_hyperbolic(line, t) : hyptrace::make_glide(line, t);
    for (int k = 0; k < 50; ++k) EXPECT_GE(displacement(g, rng.point()), t - 1e-9);
  }
}

TEST(Displacement, AttainsTranslationLengthOnAxis) {
  Rng rng(20);
  for (int i = 0; i < 200; ++i) {
    const auto line = rng.geodesic();
    const double t = rng.uniform(0.1, 5.0);
    const auto g = rng.coin() ? hyptrace::make_hyperbolic(line, t) : hyptrace::make_glide(line, t);
    const auto base = hyptrace::point_along(line, hyptrace::apply(hyptrace::frame(line), HPoint{0, 1}), 0.0);
    const auto p = hyptrace::point_along(line, base, rng.uniform(-3.0, 3.0));
    EXPECT_NEAR(displacement(g, p), t, 1e-9);
  }
}

TEST(TranslationLength, RoundtripThroughConstructors) {
  Rng rng(21);
  for (int i = 0; i < 10000; ++i) {
    const auto line = rng.geodesic();
    const double t = rng.log_uniform(1e-3, 20.0);
    const bool glide = rng.coin();
    const auto g = glide ? hyptrace::make_glide(line, t) : hyptrace::make_hyperbolic(line, t);
    const auto cls = classify(g);
    ASSERT_EQ(cls.kind, glide ? IsometryKind::GlideReflection : IsometryKind::Hyperbolic);
    EXPECT_NEAR(*cls.length, t, 1e-12);
    EXPECT_EQ(translation_length(g), *cls.length);
  }
}

TEST(TranslationLength, RelativeRoundtripAwayFromZero) {
  Rng rng(22);
  for (int i = 0; i < 10000; ++i) {
    const auto line = rng.geodesic();
    const double t = rng.uniform(0.05, 10.0);
    const auto g = rng.coin() ? hyptrace::make_glide(line, t) : hyptrace::make_hyperbolic(line, t);
    EXPECT_LE(std::abs(*classify(g).length - t), 1e-12 * t) << "t=" << t;
  }
}
