#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string_view>

#include "jinsig/error.hpp"
#include "jinsig/mesh.hpp"

namespace jinsig {

enum class Direction { SD, NotSD, Undefined };
enum class AngleType { Acute, Right, Obtuse };

constexpr std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::SD: return "SD";
    case Direction::NotSD: return "NotSD";
    case Direction::Undefined: return "Undefined";
  }
  return "?";
}

constexpr std::string_view to_string(AngleType t) {
  switch (t) {
    case AngleType::Acute: return "Acute";
    case AngleType::Right: return "Right";
    case AngleType::Obtuse: return "Obtuse";
  }
  return "?";
}

/// Angle type of |theta| together with the sign of the signed angle.
struct SignedAngleType {
  AngleType type;
  int sign;

  friend bool operator==(const SignedAngleType&, const SignedAngleType&) = default;
};

/// Cross product (p_{i+m2} - p_i) x (p_{i-m1} - p_i) of the (m1, m2) triple.
template <typename Scalar>
Scalar triple_cross(const Mesh<Scalar>& m, std::ptrdiff_t i, NeighborhoodSpec spec = {}) {
  validate(spec);
  const auto& p = m.at(i);
  return cross2<Scalar>(m.at(i + spec.m2) - p, m.at(i - spec.m1) - p);
}

template <typename Scalar>
int signature_sign(const Mesh<Scalar>& m, std::ptrdiff_t i, NeighborhoodSpec spec = {}) {
  const Scalar c = triple_cross(m, i, spec);
  if (std::abs(c) <= m.collinearity_tolerance()) return 0;
  return c > 0 ? 1 : -1;
}

template <typename Scalar>
Direction signature_direction(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  switch (signature_sign(m, i)) {
    case 1: return Direction::SD;
    case -1: return Direction::NotSD;
    default: return Direction::Undefined;
  }
}

/// Unsigned vertex angle at p_i between the arms to p_{i-m1} and p_{i+m2}.
template <typename Scalar>
Scalar angle(const Mesh<Scalar>& m, std::ptrdiff_t i, NeighborhoodSpec spec = {}) {
  validate(spec);
  const auto& p = m.at(i);
  const Point2<Scalar> u = m.at(i - spec.m1) - p;
  const Point2<Scalar> v = m.at(i + spec.m2) - p;
  if (u.norm() <= m.coincidence_tolerance() || v.norm() <= m.coincidence_tolerance()) {
    throw Error(ErrorCode::DegenerateArm, "zero-length arm at index " + std::to_string(i));
  }
  using std::abs;
  using std::atan2;
  return atan2(abs(cross2<Scalar>(u, v)), u.dot(v));
}

template <typename Scalar>
Scalar signed_angle(const Mesh<Scalar>& m, std::ptrdiff_t i, NeighborhoodSpec spec = {}) {
  const Scalar theta = angle(m, i, spec);
  return Scalar(signature_sign(m, i, spec)) * theta;
}

template <typename Scalar>
AngleType angle_type(Scalar theta, Scalar tol = Tolerance<Scalar>::right_angle) {
  constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / 2;
  if (!(theta > 0 && theta < std::numbers::pi_v<Scalar>)) {
    throw Error(ErrorCode::OutOfDomain, "angle outside (0, pi): " + std::to_string(double(theta)));
  }
  if (std::abs(theta - half_pi) <= tol) return AngleType::Right;
  return theta < half_pi ? AngleType::Acute : AngleType::Obtuse;
}

template <typename Scalar>
SignedAngleType signed_angle_type(Scalar vartheta, Scalar tol = Tolerance<Scalar>::right_angle) {
  return {angle_type(std::abs(vartheta), tol), vartheta > 0 ? 1 : -1};
}

/// Indices whose (m1, m2) triple exists: every index of a closed mesh,
/// m1 <= i < n - m2 for an open one.
template <typename Scalar>
std::vector<std::size_t> interior_indices(const Mesh<Scalar>& m, NeighborhoodSpec spec = {}) {
  validate(spec);
  return m.indices_with_stencil(-spec.m1, spec.m2);
}

template <typename Scalar>
Scalar chord(const Mesh<Scalar>& m, std::ptrdiff_t i, std::ptrdiff_t j) {
  return (m.at(i) - m.at(j)).norm();
}

/// Consecutive edge lengths, including the closing edge of a closed mesh.
template <typename Scalar>
std::vector<Scalar> edge_lengths(const Mesh<Scalar>& m) {
  const std::size_t edges = m.closed() ? m.size() : m.size() - 1;
  std::vector<Scalar> out(edges);
  for (std::size_t i = 0; i < edges; ++i) out[i] = chord(m, std::ptrdiff_t(i), std::ptrdiff_t(i + 1));
  return out;
}

/// max - min of the values is at most rtol times the largest one.
template <typename Scalar>
bool nearly_constant(const std::vector<Scalar>& values, Scalar rtol) {
  if (values.empty()) return true;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo <= rtol * std::max(std::abs(*hi), std::abs(*lo));
}

template <typename Scalar>
bool is_equally_spaced(const Mesh<Scalar>& m, Scalar tol = Tolerance<Scalar>::euclidean_spacing) {
  return nearly_constant(edge_lengths(m), tol);
}

/// No three points collinear within any window of five successive points
/// (the whole mesh when it has fewer than five).
template <typename Scalar>
bool is_convex(const Mesh<Scalar>& m, Scalar tol = Tolerance<Scalar>::collinear) {
  const std::size_t n = m.size();
  const std::size_t w = std::min<std::size_t>(5, n);
  const std::size_t starts = m.closed() ? (n == w ? 1 : n) : n - w + 1;
  const Scalar eps = tol * m.diameter() * m.diameter();
  for (std::size_t s = 0; s < starts; ++s) {
    for (std::size_t a = 0; a < w; ++a) {
      for (std::size_t b = a + 1; b < w; ++b) {
        for (std::size_t c = b + 1; c < w; ++c) {
          const auto& p = m.at(std::ptrdiff_t(s + a));
          const auto& q = m.at(std::ptrdiff_t(s + b));
          const auto& r = m.at(std::ptrdiff_t(s + c));
          if (std::abs(cross2<Scalar>(q - p, r - p)) <= eps) return false;
        }
      }
    }
  }
  return true;
}

/// Every interior angle is obtuse; straight angles count as obtuse.
template <typename Scalar>
bool is_fine(const Mesh<Scalar>& m, Scalar tol = Tolerance<Scalar>::right_angle) {
  constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / 2;
  for (auto i : interior_indices(m)) {
    if (!(angle(m, std::ptrdiff_t(i)) > half_pi + tol)) return false;
  }
  return true;
}

/// No cusp: p_{i+1} != p_{i-1} at every interior index.
template <typename Scalar>
bool is_ordinary(const Mesh<Scalar>& m) {
  for (auto i : interior_indices(m)) {
    const auto k = std::ptrdiff_t(i);
    if (chord(m, k - 1, k + 1) <= m.coincidence_tolerance()) return false;
  }
  return true;
}

template <typename Scalar>
struct Circle {
  Point2<Scalar> center;
  Scalar radius;
};

/// Circle through three points, from the intersection of two perpendicular bisectors.
template <typename Scalar>
Circle<Scalar> circumcircle(const Point2<Scalar>& p, const Point2<Scalar>& q,
                            const Point2<Scalar>& r) {
  const Point2<Scalar> a = q - p;
  const Point2<Scalar> b = r - p;
  const Scalar scale = std::max({a.squaredNorm(), b.squaredNorm(), (r - q).squaredNorm()});
  const Scalar d = 2 * cross2<Scalar>(a, b);
  if (!(scale > 0) || std::abs(d) <= 2 * Tolerance<Scalar>::collinear * scale) {
    throw Error(ErrorCode::CollinearPoints, "circumcircle of collinear points");
  }
  const Point2<Scalar> offset((b.y() * a.squaredNorm() - a.y() * b.squaredNorm()) / d,
                              (a.x() * b.squaredNorm() - b.x() * a.squaredNorm()) / d);
  return {p + offset, offset.norm()};
}

}  // namespace jinsig
