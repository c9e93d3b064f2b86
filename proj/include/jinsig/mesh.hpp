#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jinsig/error.hpp"

namespace jinsig {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

/// Library-wide default tolerances. Relative quantities are scaled by the
/// mesh diameter (lengths) or its square (areas, cross products).
template <typename Scalar>
struct Tolerance {
  static constexpr Scalar collinear = Scalar(1e-9);
  static constexpr Scalar coincident = Scalar(1e-12);
  static constexpr Scalar right_angle = Scalar(1e-7);
  static constexpr Scalar group_membership = Scalar(1e-12);
  static constexpr Scalar euclidean_spacing = Scalar(1e-9);
  static constexpr Scalar affine_spacing = Scalar(1e-6);
  static constexpr Scalar signature = Scalar(1e-6);
  static constexpr Scalar congruence = Scalar(1e-6);
};

template <typename Scalar>
inline Scalar cross2(const Point2<Scalar>& u, const Point2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

/// Offsets of the triple p_{i-m1}, p_i, p_{i+m2}.
struct NeighborhoodSpec {
  int m1 = 1;
  int m2 = 1;

  friend bool operator==(const NeighborhoodSpec&, const NeighborhoodSpec&) = default;
};

inline void validate(const NeighborhoodSpec& spec) {
  if (spec.m1 < 1 || spec.m2 < 1) {
    throw Error(ErrorCode::OutOfDomain, "neighborhood offsets must be >= 1, got (" +
                                            std::to_string(spec.m1) + "," +
                                            std::to_string(spec.m2) + ")");
  }
}

/// Ordered planar points, open or closed. Closed meshes wrap every index mod
/// n; open meshes reject indices outside [0, n).
template <typename Scalar>
class Mesh {
 public:
  using Point = Point2<Scalar>;

  Mesh(std::vector<Point> points, bool closed = false, std::string label = {})
      : points_(std::move(points)), closed_(closed), label_(std::move(label)) {
    if (points_.size() < 3) {
      throw Error(ErrorCode::InvalidMesh,
                  "a mesh needs at least 3 points, got " + std::to_string(points_.size()));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!points_[i].allFinite()) {
        throw Error(ErrorCode::InvalidMesh, "non-finite coordinate at index " + std::to_string(i));
      }
    }
    diameter_ = 0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        diameter_ = std::max(diameter_, (points_[i] - points_[j]).norm());
      }
    }
    if (!(diameter_ > 0)) throw Error(ErrorCode::InvalidMesh, "all points coincide");
    const std::size_t edges = closed_ ? points_.size() : points_.size() - 1;
    for (std::size_t i = 0; i < edges; ++i) {
      const std::size_t j = (i + 1) % points_.size();
      if ((points_[j] - points_[i]).norm() <= coincidence_tolerance()) {
        throw Error(ErrorCode::InvalidMesh, "successive points " + std::to_string(i) + " and " +
                                                std::to_string(j) + " coincide");
      }
    }
  }

  std::size_t size() const noexcept { return points_.size(); }
  bool closed() const noexcept { return closed_; }
  const std::string& label() const noexcept { return label_; }
  std::span<const Point> points() const noexcept { return points_; }
  Scalar diameter() const noexcept { return diameter_; }

  /// Length below which two points of this mesh count as coincident.
  Scalar coincidence_tolerance() const noexcept {
    return Tolerance<Scalar>::coincident * diameter_;
  }

  /// Absolute threshold on 2d cross products below which a triple is collinear.
  Scalar collinearity_tolerance() const noexcept {
    return Tolerance<Scalar>::collinear * diameter_ * diameter_;
  }

  bool contains(std::ptrdiff_t i) const noexcept {
    return closed_ || (i >= 0 && i < static_cast<std::ptrdiff_t>(points_.size()));
  }

  std::size_t wrap(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(points_.size());
    if (closed_) return static_cast<std::size_t>(((i % n) + n) % n);
    if (i < 0 || i >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(i) + " outside open mesh of " + std::to_string(n) +
                      " points");
    }
    return static_cast<std::size_t>(i);
  }

  const Point& at(std::ptrdiff_t i) const { return points_[wrap(i)]; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  /// Indices i for which every offset in [lo, hi] around i is addressable.
  std::vector<std::size_t> indices_with_stencil(int lo, int hi) const {
    std::vector<std::size_t> out;
    const auto n = static_cast<std::ptrdiff_t>(points_.size());
    if (hi - lo + 1 > n) return out;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (closed_ || (i + lo >= 0 && i + hi < n)) out.push_back(static_cast<std::size_t>(i));
    }
    return out;
  }

 private:
  std::vector<Point> points_;
  bool closed_;
  std::string label_;
  Scalar diameter_{};
};

using Mesh2d = Mesh<double>;

}  // namespace jinsig
