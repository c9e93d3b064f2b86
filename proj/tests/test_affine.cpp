#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jinsig/affine.hpp"
#include "jinsig/motion.hpp"
#include "jinsig/sampling.hpp"
#include "test_util.hpp"

using namespace jinsig;
using P = Point2<double>;

namespace {

Mesh2d ellipse(double a, double b, int n = 9, double h = 0.3, double t0 = 0.2) {
  return sampling::ellipse_arc(a, b, t0, std::vector<double>(std::size_t(n - 1), h));
}

Mesh2d parabola(int n = 9, double dx = 0.4) {
  std::vector<P> pts;
  for (int k = 0; k < n; ++k) {
    const double x = -1.3 + dx * k;
    pts.emplace_back(x, x * x);
  }
  return Mesh2d(pts);
}

Mesh2d hyperbola_branch(int n = 9, double dt = 0.2) {
  std::vector<P> pts;
  for (int k = 0; k < n; ++k) {
    const double t = dt * (k - n / 2);
    pts.emplace_back(std::cosh(t), std::sinh(t));
  }
  return Mesh2d(pts);
}

}  // namespace

TEST(AffineCurvature, Ellipses) {
  for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {3.0, 0.5}, {0.7, 1.9}}) {
    const auto m = ellipse(a, b);
    for (auto i : m.indices_with_stencil(-2, 2)) {
      EXPECT_NEAR(affine_curvature(m, std::ptrdiff_t(i)), std::pow(a * b, -2.0 / 3), 1e-9);
    }
  }
}

TEST(AffineCurvature, ParabolaAndHyperbola) {
  const auto par = parabola();
  const auto hyp = hyperbola_branch();
  for (auto i : par.indices_with_stencil(-2, 2)) {
    EXPECT_EQ(affine_curvature_sign(par, std::ptrdiff_t(i)), 0);
    EXPECT_LE(std::abs(affine_curvature(par, std::ptrdiff_t(i))), 1e-9);
    // x^2 - y^2 = 1: S = -1, F = 1.
    EXPECT_NEAR(affine_curvature(hyp, std::ptrdiff_t(i)), -1.0, 1e-9);
  }
}

TEST(AffineCurvature, InvariantUnderUnimodularMaps) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto m = sampling::random_convex_arc<double>(rng, 9);
    const auto g = random_motion<double>(Group::SA, rng);
    const auto mg = apply_motion(g, m);
    for (auto i : m.indices_with_stencil(-2, 2)) {
      const double k = affine_curvature(m, std::ptrdiff_t(i));
      ASSERT_NEAR(affine_curvature(mg, std::ptrdiff_t(i)), k, 1e-8 * std::abs(k));
    }
  }
}

TEST(ArcLength, ZeroForEqualEndpoints) { EXPECT_EQ(affine_arc_length(ellipse(2, 1), 4, 3, 3), 0.0); }

TEST(ArcLength, UnitCircleSteps) {
  // kappa_A = 1 and the centre is the origin: L = |(p_k - p_l) x p_k| = sin h.
  const double h = 0.35;
  const auto m = ellipse(1, 1, 11, h);
  for (std::ptrdiff_t at = 2; at <= 8; ++at) {
    for (std::ptrdiff_t j = at - 2; j < at + 2; ++j) {
      EXPECT_NEAR(std::abs(affine_arc_length(m, at, j, j + 1)), std::sin(h), 1e-10);
    }
  }
}

TEST(ArcLength, ParabolaBranch) {
  // On y = x^2 the equiaffine length element is 2^(1/3) dx.
  const double dx = 0.4;
  const auto m = parabola(9, dx);
  EXPECT_NEAR(std::abs(affine_arc_length(m, 4, 4, 5)), std::cbrt(2.0) * dx, 1e-9);
  EXPECT_NEAR(std::abs(affine_arc_length(m, 4, 2, 6)), std::cbrt(2.0) * 4 * dx, 1e-9);
}

TEST(ArcLength, NeighborhoodLimit) {
  const auto m = ellipse(2, 1, 13);
  EXPECT_NO_THROW(affine_arc_length(m, 6, 1, 11));
  EXPECT_ERROR_CODE(affine_arc_length(m, 6, 0, 7), ErrorCode::IndexOutOfRange);
}

TEST(ArcLength, InvariantUnderUnimodularMaps) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto m = sampling::random_convex_arc<double>(rng, 9);
    const auto mg = apply_motion(random_motion<double>(Group::SA, rng), m);
    const auto a = arc_length_set(m, 4), b = arc_length_set(mg, 4);
    for (int j = 0; j < 4; ++j) ASSERT_NEAR(a[j], b[j], 1e-8 * std::abs(a[j]));
    ASSERT_NEAR(affine_arc_length(mg, 4, 0, 8), affine_arc_length(m, 4, 0, 8),
                1e-8 * std::abs(affine_arc_length(m, 4, 0, 8)));
  }
}

TEST(ArcLengthSet, EqualOnCircleAndBoundedByMesh) {
  const auto m = ellipse(1, 1, 9, 0.4);
  const auto s = arc_length_set(m, 4);
  for (int j = 1; j < 4; ++j) EXPECT_NEAR(s[j], s[0], 1e-10);
  EXPECT_ERROR_CODE(arc_length_set(m, 1), ErrorCode::IndexOutOfRange);
}

TEST(SaSignature, EllipseEq6IsConstant) {
  const double a = 2, b = 0.75;
  const auto sig = sa_signature(ellipse(a, b, 11), Scheme::Eq6);
  ASSERT_FALSE(sig.points.empty());
  for (const auto& p : sig.points) {
    EXPECT_NEAR(p.kappa, std::pow(a * b, -2.0 / 3), 1e-9);
    EXPECT_NEAR(p.kappa_s, 0.0, 1e-8);
  }
}

TEST(SaSignature, ParabolaRowsHaveZeroCurvature) {
  const auto sig = sa_signature(parabola(9), Scheme::Eq6);
  ASSERT_FALSE(sig.points.empty());
  for (const auto& p : sig.points) {
    EXPECT_EQ(p.kappa, 0.0);
    EXPECT_EQ(p.kappa_s, 0.0);
  }
}

TEST(SaSignature, InvariantUnderUnimodularMaps) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_motion<double>(Group::SA, rng);
    const auto equal = sampling::random_ellipse_arc<double>(rng, 13, true);
    const auto unequal = sampling::random_convex_arc<double>(rng, 13);
    for (Scheme s : {Scheme::Eq5, Scheme::Eq6, Scheme::Eq7, Scheme::Eq8}) {
      const auto& m = requires_equal_spacing(s) ? equal : unequal;
      const auto a = sa_signature(m, s), b = sa_signature(apply_motion(g, m), s);
      ASSERT_LE(signature_distance(a, b), 1e-8) << to_string(s);
      ASSERT_EQ(a.extrapolated, s == Scheme::Eq7 || s == Scheme::Eq8);
    }
  }
}

TEST(SaSignature, Contract) {
  std::mt19937_64 rng(9);
  const auto uneven = sampling::random_ellipse_arc<double>(rng, 11, false);
  EXPECT_ERROR_CODE(sa_signature(uneven, Scheme::Eq6), ErrorCode::SchemeSpacingMismatch);
  EXPECT_NO_THROW(sa_signature(uneven, Scheme::Eq7));
  EXPECT_ERROR_CODE(sa_signature(ellipse(2, 1, 9), Scheme::Eq8), ErrorCode::MeshTooShort);
  EXPECT_ERROR_CODE(sa_signature(ellipse(2, 1, 9), Scheme::Eq2), ErrorCode::OutOfDomain);
  EXPECT_TRUE(is_affinely_equally_spaced(ellipse(2, 1, 9)));
  EXPECT_FALSE(is_affinely_equally_spaced(uneven));
}

TEST(SaSignature, EuclideanSpacingOption) {
  const auto m = ellipse(1, 1, 9);
  const AffineOptions euclid{AffineSpacing::Euclidean, 1e-6};
  EXPECT_NO_THROW(sa_signature(m, Scheme::Eq5, euclid));
  EXPECT_ERROR_CODE(sa_signature(ellipse(3, 1, 9), Scheme::Eq5, euclid), ErrorCode::SchemeSpacingMismatch);
}

TEST(SdAffine, FollowsOrientation) {
  const auto m = ellipse(2, 1, 7);
  std::vector<P> rev(m.points().rbegin(), m.points().rend());
  const Mesh2d r(rev);
  EXPECT_EQ(sd_affine(m, 3), AffineDirection::SD_A);
  EXPECT_EQ(sd_affine(r, 3), AffineDirection::NotSD_A);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    EXPECT_EQ(sd_affine(apply_motion(random_motion<double>(Group::SA, rng), m), 3), AffineDirection::SD_A);
  }
}

TEST(Fineness, SmallCircleArcHasFineArea) {
  const auto m = ellipse(1, 1, 5, 0.2);
  EXPECT_TRUE(has_fine_area(m, 2));
  const auto t = fine_area_terms(m, 2);
  EXPECT_NEAR(t.ellipse, std::numbers::pi, 1e-9);
  EXPECT_NEAR(t.sector, 0.8 / 2, 1e-9);
  EXPECT_TRUE(is_affine_fine(ellipse(2, 1, 9)));
}

TEST(Fineness, HyperbolaBranchPosition) {
  // x^2 - y^2 = 1: transverse semi-axis 1, so mu = 2.
  const auto m = hyperbola_branch(5, 0.2);
  EXPECT_NEAR(fine_position_mu(m, 2), 2.0, 1e-9);
  EXPECT_TRUE(in_fine_position(m, 2));
  EXPECT_TRUE(is_affine_fine(m));
  EXPECT_ERROR_CODE(has_fine_area(m, 2), ErrorCode::WrongCurvatureSign);
  EXPECT_ERROR_CODE(in_fine_position(ellipse(1, 1, 5), 2), ErrorCode::WrongCurvatureSign);
}

TEST(Fineness, OppositeBranchesAreNotInPosition) {
  const double c = std::cosh(0.2), s = std::sinh(0.2);
  const Mesh2d m({P(c, -s), P(1, 0), P(c, s), P(-c, s), P(-1, 0)});
  ASSERT_LT(affine_curvature(m, 2), 0);
  EXPECT_GT(chord(m, 2, 3), 2.0);
  EXPECT_FALSE(in_fine_position(m, 2));
}

TEST(OneNeighborhoodArea, Triangle) {
  EXPECT_DOUBLE_EQ(one_neighborhood_area(Mesh2d({P(0, 0), P(2, 0), P(2, 3)}), 1), 3.0);
}
