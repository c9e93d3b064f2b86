#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "jinsig/counterexamples.hpp"
#include "jinsig/mesh.hpp"

namespace jinsig::sampling {

/// Random turning angle with magnitude in [lo, hi] and random sign.
template <typename Scalar, typename Rng>
Scalar random_turn(Rng& rng, Scalar lo = Scalar(0.1), Scalar hi = Scalar(2.6)) {
  std::uniform_real_distribution<double> mag{double(lo), double(hi)};
  std::bernoulli_distribution coin(0.5);
  const Scalar t = Scalar(mag(rng));
  return coin(rng) ? t : -t;
}

/// Open polyline with n points; all edges equal when `equal_edges`.
template <typename Scalar, typename Rng>
Mesh<Scalar> random_turtle(Rng& rng, std::size_t n, bool equal_edges) {
  std::uniform_real_distribution<double> len(0.5, 2.0);
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  std::uniform_real_distribution<double> head(-std::numbers::pi, std::numbers::pi);
  const Scalar e0 = Scalar(len(rng));
  std::vector<Scalar> edges(n - 1), turns(n - 2);
  for (auto& e : edges) e = equal_edges ? e0 : Scalar(len(rng));
  for (auto& t : turns) t = random_turn<Scalar>(rng);
  const Point2<Scalar> start(Scalar(pos(rng)), Scalar(pos(rng)));
  return turtle_mesh<Scalar>(start, Scalar(head(rng)), edges, turns);
}

/// Closed star-shaped polygon: sorted random angles, random radii.
template <typename Scalar, typename Rng>
Mesh<Scalar> random_star(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> rad(0.5, 1.5);
  std::uniform_real_distribution<double> jitter(0.2, 0.8);
  std::vector<Point2<Scalar>> pts;
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = 2 * std::numbers::pi * (double(k) + jitter(rng)) / double(n);
    pts.push_back(on_circle<Scalar>(Scalar(rad(rng)), Scalar(phi)));
  }
  return Mesh<Scalar>(std::move(pts), true);
}

/// Points (a cos t, b sin t) at parameters t0 + sum of steps; equal steps
/// give equal affine arc lengths.
template <typename Scalar>
Mesh<Scalar> ellipse_arc(Scalar a, Scalar b, Scalar t0, const std::vector<Scalar>& steps, bool closed = false) {
  std::vector<Point2<Scalar>> pts;
  Scalar t = t0;
  pts.emplace_back(a * std::cos(t), b * std::sin(t));
  for (Scalar s : steps) {
    t += s;
    pts.emplace_back(a * std::cos(t), b * std::sin(t));
  }
  if (closed) pts.pop_back();
  return Mesh<Scalar>(std::move(pts), closed);
}

template <typename Scalar, typename Rng>
Mesh<Scalar> random_ellipse_arc(Rng& rng, std::size_t n, bool equal_steps) {
  std::uniform_real_distribution<double> axis(0.5, 3.0);
  std::uniform_real_distribution<double> step(0.15, 0.4);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  const Scalar h = Scalar(step(rng));
  std::vector<Scalar> steps(n - 1);
  for (auto& s : steps) s = equal_steps ? h : Scalar(step(rng));
  return ellipse_arc<Scalar>(Scalar(axis(rng)), Scalar(axis(rng)), Scalar(phase(rng)), steps);
}

/// Strictly convex closed-curve arc r(phi) = 1 + eps cos(3 phi), eps < 0.1,
/// with non-constant affine curvature.
template <typename Scalar, typename Rng>
Mesh<Scalar> random_convex_arc(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> eps(0.02, 0.08);
  std::uniform_real_distribution<double> step(0.15, 0.35);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  const double e = eps(rng);
  double phi = phase(rng);
  std::vector<Point2<Scalar>> pts;
  for (std::size_t k = 0; k < n; ++k) {
    pts.push_back(on_circle<Scalar>(Scalar(1 + e * std::cos(3 * phi)), Scalar(phi)));
    phi += step(rng);
  }
  return Mesh<Scalar>(std::move(pts), false);
}

/// n points equally spaced in angle on a circle of radius r, as an open arc
/// spanning `span` radians (a closed polygon when span = 2 pi and closed).
template <typename Scalar>
Mesh<Scalar> circle_samples(std::size_t n, Scalar r, Scalar span, bool closed, Scalar phase = 0) {
  std::vector<Point2<Scalar>> pts;
  const Scalar step = closed ? span / Scalar(n) : span / Scalar(n - 1);
  for (std::size_t k = 0; k < n; ++k) pts.push_back(on_circle<Scalar>(r, phase + step * Scalar(k)));
  return Mesh<Scalar>(std::move(pts), closed);
}

}  // namespace jinsig::sampling
