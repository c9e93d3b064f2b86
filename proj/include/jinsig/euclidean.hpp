#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "jinsig/error.hpp"
#include "jinsig/geometry.hpp"
#include "jinsig/mesh.hpp"
#include "jinsig/signature.hpp"

namespace jinsig {

/// 1 / circumradius of three points: 4 * area / (abc). Zero for collinear points.
template <typename Scalar>
Scalar menger_curvature(const Point2<Scalar>& p, const Point2<Scalar>& q, const Point2<Scalar>& r) {
  const Scalar a = (r - q).norm(), b = (r - p).norm(), c = (q - p).norm();
  // Twice the area from the two shortest edges, taken at the vertex they share:
  // their cross product loses less to cancellation than Heron's formula on
  // rounded side lengths does for thin triangles.
  Scalar twice_area;
  if (a >= b && a >= c) {
    twice_area = cross2<Scalar>(q - p, r - p);
  } else if (b >= c) {
    twice_area = cross2<Scalar>(p - q, r - q);
  } else {
    twice_area = cross2<Scalar>(p - r, q - r);
  }
  using std::abs;
  return 2 * abs(twice_area) / (a * b * c);
}

template <typename Scalar>
Scalar euclidean_curvature(const Mesh<Scalar>& m, std::ptrdiff_t i, NeighborhoodSpec spec = {}) {
  validate(spec);
  const auto& p = m.at(i - spec.m1);
  const auto& q = m.at(i);
  const auto& r = m.at(i + spec.m2);
  const Scalar eps = m.coincidence_tolerance();
  if ((q - p).norm() <= eps || (r - q).norm() <= eps || (r - p).norm() <= eps) {
    throw Error(ErrorCode::DegenerateTriple, "coincident points in the neighborhood of index " +
                                                 std::to_string(i));
  }
  return menger_curvature<Scalar>(p, q, r);
}

/// Index of the edge whose length is furthest from the mean edge length.
template <typename Scalar>
std::size_t worst_spacing_edge(const std::vector<Scalar>& lengths) {
  Scalar mean = 0;
  for (Scalar l : lengths) mean += l;
  mean /= Scalar(lengths.size());
  std::size_t worst = 0;
  for (std::size_t k = 1; k < lengths.size(); ++k) {
    if (std::abs(lengths[k] - mean) > std::abs(lengths[worst] - mean)) worst = k;
  }
  return worst;
}

template <typename Scalar>
void require_ordinary(const Mesh<Scalar>& m) {
  for (auto i : interior_indices(m)) {
    const auto k = std::ptrdiff_t(i);
    if (chord(m, k - 1, k + 1) <= m.coincidence_tolerance()) {
      throw Error(ErrorCode::NotOrdinary, "cusp at index " + std::to_string(i));
    }
  }
}

struct EuclideanOptions {
  double spacing_tol = Tolerance<double>::euclidean_spacing;
};

/// Two-point SE signature of `m` under one of Eq1..Eq4, with every curvature
/// evaluated on the (m1, m2) triple. Open meshes keep only the rows whose
/// whole stencil lies inside the mesh.
template <typename Scalar>
Signature<Scalar> se_signature(const Mesh<Scalar>& m, Scheme scheme, NeighborhoodSpec spec = {},
                               EuclideanOptions options = {}) {
  if (is_affine(scheme)) {
    throw Error(ErrorCode::OutOfDomain, to_string(scheme) + " is not a Euclidean scheme");
  }
  validate(spec);
  require_ordinary(m);
  if (requires_equal_spacing(scheme)) {
    const auto lengths = edge_lengths(m);
    if (!nearly_constant(lengths, Scalar(options.spacing_tol))) {
      const auto k = worst_spacing_edge(lengths);
      throw Error(ErrorCode::SchemeSpacingMismatch,
                  to_string(scheme) + " needs an equally spaced mesh; edge " + std::to_string(k) +
                      "-" + std::to_string((k + 1) % m.size()) + " deviates");
    }
  }
  const QuotientStencil q = stencil(scheme);
  const StencilExtent ext = stencil_extent(q, spec.m1, spec.m2);
  const auto rows = m.indices_with_stencil(ext.lo, ext.hi);
  if (rows.empty()) {
    throw Error(ErrorCode::MeshTooShort, to_string(scheme) + " needs " +
                                             std::to_string(ext.hi - ext.lo + 1) +
                                             " points per stencil, mesh has " +
                                             std::to_string(m.size()));
  }

  Signature<Scalar> sig;
  sig.scheme = scheme;
  sig.spec = spec;
  sig.kappa_scale = Scalar(1) / m.diameter();
  sig.kappa_s_scale = sig.kappa_scale * sig.kappa_scale;
  sig.points.reserve(rows.size());
  for (auto row : rows) {
    const auto i = std::ptrdiff_t(row);
    const Scalar d = chord(m, i + q.from, i + q.to);
    if (d <= m.coincidence_tolerance()) {
      throw Error(ErrorCode::DegenerateStencil, "vanishing stencil chord at index " + std::to_string(row));
    }
    const Scalar k_hi = euclidean_curvature(m, i + q.upper, spec);
    const Scalar k_lo = euclidean_curvature(m, i + q.lower, spec);
    sig.points.push_back({row, euclidean_curvature(m, i, spec), Scalar(q.weight) * (k_hi - k_lo) / d});
  }
  return sig;
}

}  // namespace jinsig
