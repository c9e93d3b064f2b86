#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "jinsig/error.hpp"
#include "jinsig/mesh.hpp"

namespace jinsig {

/// A x^2 + 2B xy + C y^2 + 2D x + 2E y + F0 = 0.
template <typename Scalar>
struct ConicCoeffs {
  Scalar A = 0, B = 0, C = 0, D = 0, E = 0, F0 = 0;

  using Vector6 = Eigen::Matrix<Scalar, 6, 1>;
  using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

  static ConicCoeffs from_vector(const Vector6& v) { return {v(0), v(1), v(2), v(3), v(4), v(5)}; }

  Vector6 vector() const {
    Vector6 v;
    v << A, B, C, D, E, F0;
    return v;
  }

  Matrix3 matrix() const {
    Matrix3 q;
    q << A, B, D, B, C, E, D, E, F0;
    return q;
  }

  static ConicCoeffs from_matrix(const Matrix3& q) {
    return {q(0, 0), q(0, 1), q(1, 1), q(0, 2), q(1, 2), q(2, 2)};
  }

  Matrix2<Scalar> quadratic_part() const {
    Matrix2<Scalar> m;
    m << A, B, B, C;
    return m;
  }

  Scalar operator()(const Point2<Scalar>& p) const {
    const Scalar x = p.x(), y = p.y();
    return A * x * x + 2 * B * x * y + C * y * y + 2 * D * x + 2 * E * y + F0;
  }

  ConicCoeffs scaled(Scalar lambda) const {
    return {lambda * A, lambda * B, lambda * C, lambda * D, lambda * E, lambda * F0};
  }

  /// Unit Euclidean norm; the first coefficient of magnitude above 1e-12,
  /// scanning A, B, C, D, E, F0, is made positive.
  ConicCoeffs normalized() const {
    Vector6 v = vector();
    const Scalar n = v.norm();
    if (!(n > 0)) throw Error(ErrorCode::DegenerateConfiguration, "all conic coefficients vanish");
    v /= n;
    for (int k = 0; k < 6; ++k) {
      if (std::abs(v(k)) > Scalar(1e-12)) {
        if (v(k) < 0) v = -v;
        break;
      }
    }
    return from_vector(v);
  }
};

template <typename Scalar>
struct AffineInvariants {
  Scalar S;
  Scalar F;
};

template <typename Scalar>
AffineInvariants<Scalar> invariants(const ConicCoeffs<Scalar>& c) {
  return {c.A * c.C - c.B * c.B, c.matrix().determinant()};
}

/// Coefficient-free measure of the quadratic part, used to judge S against zero.
template <typename Scalar>
Scalar quadratic_scale(const ConicCoeffs<Scalar>& c) {
  return c.A * c.A + 2 * c.B * c.B + c.C * c.C;
}

template <typename Scalar>
bool is_parabolic(const ConicCoeffs<Scalar>& c, Scalar rtol = Scalar(1e-10)) {
  return std::abs(invariants(c).S) <= rtol * quadratic_scale(c);
}

template <typename Scalar>
Point2<Scalar> conic_center(const ConicCoeffs<Scalar>& c) {
  if (is_parabolic(c)) throw Error(ErrorCode::ParabolicConic, "conic has no center (AC - B^2 = 0)");
  const Scalar s = c.A * c.C - c.B * c.B;
  return {(c.B * c.E - c.C * c.D) / s, -(c.A * c.E - c.B * c.D) / s};
}

/// S / F^(2/3) with F^(2/3) taken as the square of the real cube root.
template <typename Scalar>
Scalar curvature_invariant(const ConicCoeffs<Scalar>& c) {
  const auto inv = invariants(c);
  using std::cbrt;
  const Scalar r = cbrt(inv.F);
  return inv.S / (r * r);
}

/// Conic through five points, stored both in the caller's frame and in a
/// normalized frame u = (p - centre) / scale where all later arithmetic runs.
template <typename Scalar>
struct LocalConic {
  ConicCoeffs<Scalar> global;
  ConicCoeffs<Scalar> local;
  Point2<Scalar> centre;
  Scalar scale;
  std::array<Point2<Scalar>, 5> points;

  Point2<Scalar> to_local(const Point2<Scalar>& p) const { return (p - centre) / scale; }
  Point2<Scalar> to_global(const Point2<Scalar>& u) const { return centre + scale * u; }
};

template <typename Scalar>
LocalConic<Scalar> fit_local_conic(const std::array<Point2<Scalar>, 5>& p) {
  Point2<Scalar> centre = Point2<Scalar>::Zero();
  for (const auto& q : p) centre += q;
  centre /= Scalar(5);
  Scalar ms = 0;
  for (const auto& q : p) ms += (q - centre).squaredNorm();
  using std::sqrt;
  const Scalar scale = sqrt(ms / Scalar(10));
  if (!(scale > 0)) throw Error(ErrorCode::DegenerateConfiguration, "five coincident points");

  std::array<Point2<Scalar>, 5> u;
  for (int k = 0; k < 5; ++k) u[k] = (p[k] - centre) / scale;

  Scalar diam2 = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) diam2 = std::max(diam2, (u[a] - u[b]).squaredNorm());
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      if ((u[a] - u[b]).squaredNorm() <= Scalar(1e-24) * diam2) {
        throw Error(ErrorCode::DegenerateConfiguration, "coincident points in conic fit");
      }
      for (int c = b + 1; c < 5; ++c) {
        if (std::abs(cross2<Scalar>(u[b] - u[a], u[c] - u[a])) <= Tolerance<Scalar>::collinear * diam2) {
          throw Error(ErrorCode::DegenerateConfiguration,
                      "three collinear points among the five (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> design(5, 6);
  for (int k = 0; k < 5; ++k) {
    const Scalar x = u[k].x(), y = u[k].y();
    design.row(k) << x * x, 2 * x * y, y * y, 2 * x, 2 * y, Scalar(1);
  }
  Eigen::JacobiSVD<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> svd(design, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(4) > Scalar(1e-12) * sv(0))) {
    throw Error(ErrorCode::DegenerateConfiguration, "five points do not determine a unique conic");
  }
  const auto local = ConicCoeffs<Scalar>::from_vector(svd.matrixV().col(5)).normalized();

  Eigen::Matrix<Scalar, 3, 3> t = Eigen::Matrix<Scalar, 3, 3>::Identity();
  t(0, 0) = t(1, 1) = Scalar(1) / scale;
  t(0, 2) = -centre.x() / scale;
  t(1, 2) = -centre.y() / scale;
  const auto global =
      ConicCoeffs<Scalar>::from_matrix(t.transpose() * local.matrix() * t).normalized();
  return {global, local, centre, scale, p};
}

template <typename Scalar>
ConicCoeffs<Scalar> fit_conic(const std::array<Point2<Scalar>, 5>& p) {
  return fit_local_conic(p).global;
}

}  // namespace jinsig
