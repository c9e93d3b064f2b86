#pragma once

#include <Eigen/Core>
#include <Eigen/LU>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

#include "jinsig/error.hpp"
#include "jinsig/mesh.hpp"

namespace jinsig {

/// SE: rotations; E: rotations and reflections; SA: det = +1; Abar: det = +-1.
enum class Group { SE, E, SA, Abar };

constexpr std::string_view to_string(Group g) {
  switch (g) {
    case Group::SE: return "SE";
    case Group::E: return "E";
    case Group::SA: return "SA";
    case Group::Abar: return "Abar";
  }
  return "?";
}

constexpr bool is_euclidean(Group g) { return g == Group::SE || g == Group::E; }
constexpr bool allows_reflection(Group g) { return g == Group::E || g == Group::Abar; }

template <typename Scalar>
bool satisfies_group(Group group, const Matrix2<Scalar>& linear,
                     Scalar tol = Tolerance<Scalar>::group_membership) {
  using std::abs;
  if (!linear.allFinite()) return false;
  const Scalar det = linear.determinant();
  if (is_euclidean(group)) {
    const Matrix2<Scalar> gram = linear.transpose() * linear;
    if ((gram - Matrix2<Scalar>::Identity()).cwiseAbs().maxCoeff() > tol) return false;
  }
  if (allows_reflection(group)) return abs(abs(det) - Scalar(1)) <= tol;
  return abs(det - Scalar(1)) <= tol;
}

/// An element x -> linear * x + translation of one of the four groups.
template <typename Scalar>
class GroupElement {
 public:
  GroupElement(Group group, const Matrix2<Scalar>& linear, const Point2<Scalar>& translation)
      : group_(group), linear_(linear), translation_(translation) {
    if (!satisfies_group(group, linear) || !translation.allFinite()) {
      throw Error(ErrorCode::InvalidGroupElement,
                  "linear part is not a member of " + std::string(to_string(group)));
    }
  }

  static GroupElement identity(Group group) {
    return GroupElement(group, Matrix2<Scalar>::Identity(), Point2<Scalar>::Zero());
  }

  Group group() const noexcept { return group_; }
  const Matrix2<Scalar>& linear() const noexcept { return linear_; }
  const Point2<Scalar>& translation() const noexcept { return translation_; }
  bool reflects() const { return linear_.determinant() < 0; }

  Point2<Scalar> apply(const Point2<Scalar>& p) const { return linear_ * p + translation_; }
  Point2<Scalar> operator()(const Point2<Scalar>& p) const { return apply(p); }

  GroupElement inverse() const {
    const Matrix2<Scalar> inv = linear_.inverse();
    return GroupElement(group_, inv, -(inv * translation_));
  }

  /// (*this) after `other`: x -> this(other(x)).
  GroupElement compose(const GroupElement& other) const {
    return GroupElement(group_, linear_ * other.linear_, linear_ * other.translation_ + translation_);
  }

 private:
  Group group_;
  Matrix2<Scalar> linear_;
  Point2<Scalar> translation_;
};

template <typename Scalar>
Matrix2<Scalar> rotation(Scalar theta) {
  using std::cos;
  using std::sin;
  Matrix2<Scalar> r;
  r << cos(theta), -sin(theta), sin(theta), cos(theta);
  return r;
}

template <typename Scalar>
Matrix2<Scalar> reflection_x() {
  Matrix2<Scalar> r;
  r << 1, 0, 0, -1;
  return r;
}

template <typename Scalar>
Mesh<Scalar> apply_motion(const GroupElement<Scalar>& g, const Mesh<Scalar>& m) {
  std::vector<Point2<Scalar>> out;
  out.reserve(m.size());
  for (const auto& p : m.points()) out.push_back(g.apply(p));
  return Mesh<Scalar>(std::move(out), m.closed(), m.label());
}

/// Random element of `group`. SA/Abar matrices are R(a) diag(s, 1/s) R(b) with
/// ln s uniform in [-ln 10, ln 10], so the condition number is at most 100.
template <typename Scalar, typename Rng>
GroupElement<Scalar> random_motion(Group group, Rng& rng) {
  constexpr double pi = std::numbers::pi;
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  std::uniform_real_distribution<double> log_scale(-std::log(10.0), std::log(10.0));
  std::bernoulli_distribution coin(0.5);

  Matrix2<Scalar> linear;
  if (is_euclidean(group)) {
    linear = rotation<Scalar>(Scalar(angle(rng)));
  } else {
    const double a = angle(rng);
    const double b = angle(rng);
    const double s = std::exp(log_scale(rng));
    Matrix2<Scalar> d = Matrix2<Scalar>::Zero();
    d(0, 0) = Scalar(s);
    d(1, 1) = Scalar(1.0 / s);
    linear = rotation<Scalar>(Scalar(a)) * d * rotation<Scalar>(Scalar(b));
  }
  if (allows_reflection(group) && coin(rng)) linear = linear * reflection_x<Scalar>();
  const Scalar tx = Scalar(shift(rng));
  const Scalar ty = Scalar(shift(rng));
  return GroupElement<Scalar>(group, linear, Point2<Scalar>(tx, ty));
}

template <typename Scalar = double>
GroupElement<Scalar> random_motion(Group group, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_motion<Scalar>(group, rng);
}

}  // namespace jinsig
