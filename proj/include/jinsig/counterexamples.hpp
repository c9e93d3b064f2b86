#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jinsig/congruence.hpp"
#include "jinsig/error.hpp"
#include "jinsig/mesh.hpp"
#include "jinsig/motion.hpp"

namespace jinsig {

/// Polyline from `start` walking `edges[k]` after turning by `turns[k-1]`
/// (counterclockwise positive). turns has one entry fewer than edges.
template <typename Scalar>
Mesh<Scalar> turtle_mesh(const Point2<Scalar>& start, Scalar heading, const std::vector<Scalar>& edges,
                         const std::vector<Scalar>& turns, bool closed = false, std::string label = {}) {
  if (turns.size() + 1 != edges.size()) {
    throw Error(ErrorCode::InvalidMesh, "turtle path needs one turn between consecutive edges");
  }
  std::vector<Point2<Scalar>> pts{start};
  Scalar h = heading;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k > 0) h += turns[k - 1];
    pts.push_back(pts.back() + edges[k] * Point2<Scalar>(std::cos(h), std::sin(h)));
  }
  return Mesh<Scalar>(std::move(pts), closed, std::move(label));
}

template <typename Scalar>
Point2<Scalar> on_circle(Scalar radius, Scalar phi, const Point2<Scalar>& centre = Point2<Scalar>::Zero()) {
  return centre + radius * Point2<Scalar>(std::cos(phi), std::sin(phi));
}

enum class CounterexampleId { Ex1, Ex2, Ex3, AffineAnalogue };

constexpr std::string_view to_string(CounterexampleId id) {
  switch (id) {
    case CounterexampleId::Ex1: return "ex1";
    case CounterexampleId::Ex2: return "ex2";
    case CounterexampleId::Ex3: return "ex3";
    case CounterexampleId::AffineAnalogue: return "affine";
  }
  return "?";
}

inline CounterexampleId counterexample_from_string(std::string_view s) {
  for (auto id : {CounterexampleId::Ex1, CounterexampleId::Ex2, CounterexampleId::Ex3,
                  CounterexampleId::AffineAnalogue}) {
    if (s == to_string(id)) return id;
  }
  throw Error(ErrorCode::OutOfDomain, "unknown counterexample id '" + std::string(s) + "'");
}

struct ExpectedVerdict {
  Group group;
  Status status;
};

/// Two meshes that agree on the invariant named by `shared` but are not
/// congruent under every group listed with NotCongruent.
template <typename Scalar>
struct Counterexample {
  CounterexampleId id;
  Mesh<Scalar> a;
  Mesh<Scalar> b;
  /// "curvature" (euclidean_curvature at the interior points) or a scheme name.
  std::string shared;
  std::string description;
  std::vector<ExpectedVerdict> expected;
};

struct CounterexampleParams {
  double big_radius = 1.0;
  double small_radius = 0.5;
  double chord = 1.0;
};

/// Two samplings of the unit circle with different spacings.
template <typename Scalar>
Counterexample<Scalar> example_circle_samplings() {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  Mesh<Scalar> a({on_circle<Scalar>(1, -pi / 4), on_circle<Scalar>(1, pi / 6), on_circle<Scalar>(1, 2 * pi / 3)},
                 false, "ex1_a");
  Mesh<Scalar> b({on_circle<Scalar>(1, -pi / 2), on_circle<Scalar>(1, 0), on_circle<Scalar>(1, pi / 3)}, false,
                 "ex1_b");
  return {CounterexampleId::Ex1, a, b, "curvature",
          "two 3-point samplings of the unit circle: equal curvature 1, different shapes",
          {{Group::SE, Status::NotCongruent}, {Group::E, Status::NotCongruent}}};
}

/// An equally spaced 3-point mesh and its mirror image across x = 1.5 R.
template <typename Scalar>
Counterexample<Scalar> example_mirror_pair(Scalar radius = 1) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  std::vector<Point2<Scalar>> pa{on_circle<Scalar>(radius, pi / 7 - pi / 4), on_circle<Scalar>(radius, pi / 7),
                                 on_circle<Scalar>(radius, pi / 7 + pi / 4)};
  std::vector<Point2<Scalar>> pb;
  for (const auto& p : pa) pb.emplace_back(3 * radius - p.x(), p.y());
  return {CounterexampleId::Ex2, Mesh<Scalar>(pa, false, "ex2_a"), Mesh<Scalar>(pb, false, "ex2_b"), "curvature",
          "equally spaced 3-point meshes on equal circles related by a reflection",
          {{Group::SE, Status::NotCongruent}, {Group::E, Status::Congruent}}};
}

/// Five equally spaced points whose one-neighborhood circumradii are
/// (R, R, r), built twice with the last turn on opposite sides.
template <typename Scalar>
Counterexample<Scalar> example_equal_signature(const CounterexampleParams& prm = {}) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar R = Scalar(prm.big_radius);
  const Scalar r = Scalar(prm.small_radius);
  const Scalar chord13 = Scalar(prm.chord);
  if (!(chord13 < 2 * R)) throw Error(ErrorCode::OutOfDomain, "chord must be shorter than the big diameter");
  // Obtuse inscribed angle opposite the chord p_1 p_3 on the big circle.
  const Scalar theta_big = pi - std::asin(chord13 / (2 * R));
  const Scalar edge = chord13 / (2 * std::sin(theta_big / 2));
  if (!(edge < 2 * r)) throw Error(ErrorCode::OutOfDomain, "edge too long for the small circle");
  const Scalar theta_small = 2 * std::acos(edge / (2 * r));
  const Scalar tb = pi - theta_big;
  const Scalar ts = pi - theta_small;
  // Built outward from p_3 at the origin with p_2 on the negative x-axis, so the
  // two last points are exact mirror images in y and every distance agrees bitwise.
  auto step = [&](Scalar h) { return Point2<Scalar>(edge * std::cos(h), edge * std::sin(h)); };
  const Point2<Scalar> p3 = Point2<Scalar>::Zero();
  const Point2<Scalar> p2 = p3 - step(0);
  const Point2<Scalar> p1 = p2 - step(-tb);
  const Point2<Scalar> p0 = p1 - step(-2 * tb);
  const Point2<Scalar> up = p3 + step(ts);
  const Point2<Scalar> down(up.x(), -up.y());
  Mesh<Scalar> a({p0, p1, p2, p3, up}, false, "ex3_a");
  Mesh<Scalar> b({p0, p1, p2, p3, down}, false, "ex3_b");
  return {CounterexampleId::Ex3, a, b, "Eq2",
          "equally spaced 5-point meshes with circumradii (R, R, r): equal Eq2 signatures, different shapes",
          {{Group::SE, Status::NotCongruent}, {Group::E, Status::NotCongruent}}};
}

/// Ellipse samples at equal parameter steps and their image under an
/// orientation-reversing unimodular map: equal Eq6 signatures, not SA-congruent.
template <typename Scalar>
Counterexample<Scalar> example_affine_mirror() {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  std::vector<Point2<Scalar>> pa;
  for (int k = 0; k < 9; ++k) {
    const Scalar t = Scalar(0.3) + k * pi / 8;
    pa.emplace_back(2 * std::cos(t), std::sin(t));
  }
  Matrix2<Scalar> flip;
  flip << 1, Scalar(0.5), 0, -1;
  const GroupElement<Scalar> g(Group::Abar, flip, Point2<Scalar>(Scalar(0.5), Scalar(-1)));
  Mesh<Scalar> a(pa, false, "affine_a");
  auto b = apply_motion(g, a);
  b = Mesh<Scalar>(std::vector<Point2<Scalar>>(b.points().begin(), b.points().end()), false, "affine_b");
  return {CounterexampleId::AffineAnalogue, a, b, "Eq6",
          "ellipse arc and its image under a det = -1 unimodular map: equal Eq6 signatures",
          {{Group::SA, Status::NotCongruent}, {Group::Abar, Status::Congruent}}};
}

template <typename Scalar = double>
Counterexample<Scalar> counterexample(CounterexampleId id, const CounterexampleParams& prm = {}) {
  switch (id) {
    case CounterexampleId::Ex1: return example_circle_samplings<Scalar>();
    case CounterexampleId::Ex2: return example_mirror_pair<Scalar>(Scalar(prm.big_radius));
    case CounterexampleId::Ex3: return example_equal_signature<Scalar>(prm);
    case CounterexampleId::AffineAnalogue: return example_affine_mirror<Scalar>();
  }
  throw Error(ErrorCode::OutOfDomain, "unknown counterexample");
}

/// Equally spaced 3-point meshes with curvature kappa and end-to-end chord
/// `base`: apex on the minor or major arc, in either direction. Four pairwise
/// non-congruent meshes when kappa * base < 2, two when it equals 2.
template <typename Scalar>
std::vector<Mesh<Scalar>> classification_witnesses(Scalar kappa, Scalar base, Scalar tol = Scalar(1e-12)) {
  if (!(kappa > 0) || !(base > 0)) throw Error(ErrorCode::OutOfDomain, "kappa and base must be positive");
  const Scalar R = 1 / kappa;
  const Scalar ratio = kappa * base / 2;
  if (ratio > 1 + tol) throw Error(ErrorCode::OutOfDomain, "no triangle with kappa * base > 2");
  const bool diameter = std::abs(ratio - 1) <= tol;
  const Scalar phi = diameter ? std::numbers::pi_v<Scalar> / 2 : std::asin(ratio);
  const Point2<Scalar> lo(R * std::cos(phi), -R * std::sin(phi));
  const Point2<Scalar> hi(R * std::cos(phi), R * std::sin(phi));
  std::vector<Mesh<Scalar>> out;
  out.emplace_back(std::vector<Point2<Scalar>>{lo, Point2<Scalar>(R, 0), hi}, false, "minor_sd");
  out.emplace_back(std::vector<Point2<Scalar>>{hi, Point2<Scalar>(R, 0), lo}, false, "minor_notsd");
  if (!diameter) {
    out.emplace_back(std::vector<Point2<Scalar>>{hi, Point2<Scalar>(-R, 0), lo}, false, "major_sd");
    out.emplace_back(std::vector<Point2<Scalar>>{lo, Point2<Scalar>(-R, 0), hi}, false, "major_notsd");
  }
  return out;
}

/// Applies g_r to every point whose index is r mod 3.
template <typename Scalar>
Mesh<Scalar> residue_splice(const Mesh<Scalar>& m, const GroupElement<Scalar>& g0, const GroupElement<Scalar>& g1,
                            const GroupElement<Scalar>& g2) {
  std::vector<Point2<Scalar>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& g = i % 3 == 0 ? g0 : (i % 3 == 1 ? g1 : g2);
    out.push_back(g.apply(m[i]));
  }
  return Mesh<Scalar>(std::move(out), m.closed(), m.label());
}

}  // namespace jinsig
