#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "jinsig/conic.hpp"
#include "jinsig/error.hpp"
#include "jinsig/euclidean.hpp"
#include "jinsig/geometry.hpp"
#include "jinsig/mesh.hpp"
#include "jinsig/signature.hpp"

namespace jinsig {

/// Conic through the two-neighborhood p_{i-2} .. p_{i+2}, with the affine
/// quantities derived from it. All arithmetic is carried out in the
/// normalized frame of the fit and converted back by powers of its scale.
template <typename Scalar>
class AffineFrame {
 public:
  explicit AffineFrame(const LocalConic<Scalar>& fit) : fit_(fit) {
    const auto inv = invariants(fit_.local);
    S_ = inv.S;
    F_ = inv.F;
    if (std::abs(F_) <= Scalar(1e-12)) {
      throw Error(ErrorCode::ZeroF, "fitted conic is degenerate (F = 0)");
    }
    if (std::abs(S_) <= Scalar(1e-10) * quadratic_scale(fit_.local)) {
      sign_ = 0;
      kappa_local_ = 0;
    } else {
      sign_ = S_ > 0 ? 1 : -1;
      const Scalar r = std::cbrt(F_);
      kappa_local_ = S_ / (r * r);
      centre_local_ = conic_center(fit_.local);
    }
  }

  const LocalConic<Scalar>& fit() const noexcept { return fit_; }
  int curvature_sign() const noexcept { return sign_; }

  Scalar curvature() const {
    using std::pow;
    return kappa_local_ * pow(fit_.scale, Scalar(-4) / Scalar(3));
  }

  /// Centre of the fitted conic in caller coordinates; throws for parabolas.
  Point2<Scalar> centre() const {
    if (sign_ == 0) throw Error(ErrorCode::ParabolicConic, "zero affine curvature: conic has no centre");
    return fit_.to_global(centre_local_);
  }

  /// L_{k,l} between two caller-frame points on (or near) the fitted conic.
  Scalar arc_length(const Point2<Scalar>& pk, const Point2<Scalar>& pl) const {
    const Point2<Scalar> uk = fit_.to_local(pk);
    const Point2<Scalar> ul = fit_.to_local(pl);
    Scalar value;
    if (sign_ != 0) {
      value = std::abs(kappa_local_ * cross2<Scalar>(uk - ul, uk - centre_local_));
    } else {
      const auto& c = fit_.local;
      const Scalar den = c.A * c.E - c.B * c.D;
      if (std::abs(c.A) <= Scalar(1e-12) || std::abs(den) <= Scalar(1e-12)) {
        throw Error(ErrorCode::ZeroDenominator, "zero-curvature arc length needs A != 0 and AE - BD != 0");
      }
      value = std::cbrt(c.A * c.A / den) * ((uk.x() - ul.x()) + (c.B / c.A) * (uk.y() - ul.y()));
    }
    using std::pow;
    return value * pow(fit_.scale, Scalar(2) / Scalar(3));
  }

  Scalar S() const noexcept { return S_; }
  Scalar F() const noexcept { return F_; }
  const Point2<Scalar>& local_centre() const noexcept { return centre_local_; }

 private:
  LocalConic<Scalar> fit_;
  Scalar S_{}, F_{};
  int sign_ = 0;
  Scalar kappa_local_ = 0;
  Point2<Scalar> centre_local_ = Point2<Scalar>::Zero();
};

template <typename Scalar>
std::array<Point2<Scalar>, 5> two_neighborhood(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  return {m.at(i - 2), m.at(i - 1), m.at(i), m.at(i + 1), m.at(i + 2)};
}

template <typename Scalar>
AffineFrame<Scalar> affine_frame(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  return AffineFrame<Scalar>(fit_local_conic(two_neighborhood(m, i)));
}

template <typename Scalar>
Scalar affine_curvature(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  return affine_frame(m, i).curvature();
}

template <typename Scalar>
int affine_curvature_sign(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  return affine_frame(m, i).curvature_sign();
}

/// L_{k,l} with the conic fitted at `at`; k and l must lie within five steps of `at`.
template <typename Scalar>
Scalar affine_arc_length(const Mesh<Scalar>& m, std::ptrdiff_t at, std::ptrdiff_t k, std::ptrdiff_t l) {
  if (std::abs(k - at) > 5 || std::abs(l - at) > 5) {
    throw Error(ErrorCode::IndexOutOfRange, "arc length endpoints must lie in the five-neighborhood of " +
                                                std::to_string(at));
  }
  const auto frame = affine_frame(m, at);
  return frame.arc_length(m.at(k), m.at(l));
}

/// (L_{i-2}, L_{i-1}, L_i, L_{i+1}) with L_j = L_{j,j+1}, all from the conic at i.
template <typename Scalar>
std::array<Scalar, 4> arc_length_set(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  const auto frame = affine_frame(m, i);
  std::array<Scalar, 4> out;
  for (int j = -2; j <= 1; ++j) out[j + 2] = frame.arc_length(m.at(i + j), m.at(i + j + 1));
  return out;
}

/// Length scale sqrt(largest consecutive triangle area); invariant under SA(2).
template <typename Scalar>
Scalar affine_length_scale(const Mesh<Scalar>& m) {
  Scalar best = 0;
  for (auto i : interior_indices(m)) best = std::max(best, std::abs(triple_cross(m, std::ptrdiff_t(i))) / 2);
  if (!(best > 0)) best = m.diameter() * m.diameter();
  return std::sqrt(best);
}

/// |L_{j,j+1}| for every edge, each measured with the nearest available conic.
template <typename Scalar>
std::vector<Scalar> affine_edge_lengths(const Mesh<Scalar>& m) {
  const auto n = std::ptrdiff_t(m.size());
  if (n < 5) throw Error(ErrorCode::MeshTooShort, "affine arc lengths need at least 5 points");
  const std::ptrdiff_t edges = m.closed() ? n : n - 1;
  std::vector<Scalar> out(std::size_t(edges), Scalar(0));
  std::map<std::ptrdiff_t, AffineFrame<Scalar>> frames;
  for (std::ptrdiff_t j = 0; j < edges; ++j) {
    const std::ptrdiff_t at = m.closed() ? j : std::clamp<std::ptrdiff_t>(j, 2, n - 3);
    auto it = frames.find(at);
    if (it == frames.end()) it = frames.emplace(at, affine_frame(m, at)).first;
    out[std::size_t(j)] = std::abs(it->second.arc_length(m.at(j), m.at(j + 1)));
  }
  return out;
}

enum class AffineSpacing { ArcLength, Euclidean };

struct AffineOptions {
  AffineSpacing spacing = AffineSpacing::ArcLength;
  double spacing_tol = Tolerance<double>::affine_spacing;
};

template <typename Scalar>
bool is_affinely_equally_spaced(const Mesh<Scalar>& m, Scalar tol = Tolerance<Scalar>::affine_spacing) {
  return nearly_constant(affine_edge_lengths(m), tol);
}

/// Three-point SA signature under one of Eq5..Eq8.
template <typename Scalar>
Signature<Scalar> sa_signature(const Mesh<Scalar>& m, Scheme scheme, AffineOptions options = {}) {
  if (!is_affine(scheme)) {
    throw Error(ErrorCode::OutOfDomain, to_string(scheme) + " is not an equiaffine scheme");
  }
  require_ordinary(m);
  const QuotientStencil q = stencil(scheme);
  const StencilExtent ext = stencil_extent(q, 2, 2);
  const auto rows = m.indices_with_stencil(ext.lo, ext.hi);
  if (rows.empty()) {
    throw Error(ErrorCode::MeshTooShort, to_string(scheme) + " needs " +
                                             std::to_string(ext.hi - ext.lo + 1) +
                                             " points per stencil, mesh has " +
                                             std::to_string(m.size()));
  }
  if (requires_equal_spacing(scheme)) {
    const auto lengths = options.spacing == AffineSpacing::ArcLength ? affine_edge_lengths(m)
                                                                     : edge_lengths(m);
    if (!nearly_constant(lengths, Scalar(options.spacing_tol))) {
      const auto k = worst_spacing_edge(lengths);
      throw Error(ErrorCode::SchemeSpacingMismatch,
                  to_string(scheme) + " needs an equally spaced mesh; edge " + std::to_string(k) +
                      "-" + std::to_string((k + 1) % m.size()) + " deviates");
    }
  }

  const Scalar ell = affine_length_scale(m);
  Signature<Scalar> sig;
  sig.scheme = scheme;
  sig.spec = {2, 2};
  sig.kappa_scale = std::pow(ell, Scalar(-4) / Scalar(3));
  sig.kappa_s_scale = Scalar(1) / (ell * ell);
  sig.extrapolated = scheme == Scheme::Eq7 || scheme == Scheme::Eq8;
  const Scalar min_length = Scalar(1e-12) * std::pow(ell, Scalar(2) / Scalar(3));

  std::map<std::size_t, AffineFrame<Scalar>> frames;
  auto frame_at = [&](std::ptrdiff_t i) -> const AffineFrame<Scalar>& {
    const std::size_t key = m.wrap(i);
    auto it = frames.find(key);
    if (it == frames.end()) it = frames.emplace(key, affine_frame(m, std::ptrdiff_t(key))).first;
    return it->second;
  };

  sig.points.reserve(rows.size());
  for (auto row : rows) {
    const auto i = std::ptrdiff_t(row);
    const auto& here = frame_at(i);
    const Scalar len = std::abs(here.arc_length(m.at(i + q.from), m.at(i + q.to)));
    if (len <= min_length) {
      throw Error(ErrorCode::DegenerateStencil, "vanishing affine arc length at index " + std::to_string(row));
    }
    const Scalar kappa = here.curvature();
    const Scalar k_hi = frame_at(i + q.upper).curvature();
    const Scalar k_lo = frame_at(i + q.lower).curvature();
    sig.points.push_back({row, kappa, Scalar(q.weight) * (k_hi - k_lo) / len});
  }
  return sig;
}

enum class AffineDirection { SD_A, NotSD_A };

/// Orientation of the two-neighborhood along its conic, read from the
/// signature signs at i-1, i and i+1.
template <typename Scalar>
AffineDirection sd_affine(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  (void)fit_local_conic(two_neighborhood(m, i));
  const int a = signature_sign(m, i - 1);
  const int b = signature_sign(m, i);
  const int c = signature_sign(m, i + 1);
  if (a > 0 && b > 0 && c > 0) return AffineDirection::SD_A;
  if (a < 0 && b < 0 && c < 0) return AffineDirection::NotSD_A;
  throw Error(ErrorCode::DegenerateConfiguration,
              "two-neighborhood of " + std::to_string(i) + " does not turn consistently");
}

template <typename Scalar>
struct SectorAreas {
  Scalar ellipse;
  Scalar sector;
};

/// Area of the fitted ellipse and of the sector swept by the two-neighborhood.
template <typename Scalar>
SectorAreas<Scalar> fine_area_terms(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  const auto frame = affine_frame(m, i);
  if (frame.curvature_sign() <= 0) {
    throw Error(ErrorCode::WrongCurvatureSign, "fine area needs positive affine curvature at " + std::to_string(i));
  }
  const auto& c = frame.fit().local;
  const Scalar level = -frame.F() / frame.S();
  const Matrix2<Scalar> w2 = c.quadratic_part() / level;
  Eigen::SelfAdjointEigenSolver<Matrix2<Scalar>> eig(w2);
  if (!(eig.eigenvalues().minCoeff() > 0)) {
    throw Error(ErrorCode::DegenerateConfiguration, "fitted conic is not a real ellipse");
  }
  const Matrix2<Scalar> w = eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().asDiagonal() *
                            eig.eigenvectors().transpose();
  Scalar swept = 0;
  Scalar prev = 0;
  for (int j = -2; j <= 2; ++j) {
    const Point2<Scalar> v = w * (frame.fit().to_local(m.at(i + j)) - frame.local_centre());
    const Scalar phi = std::atan2(v.y(), v.x());
    if (j > -2) {
      Scalar d = phi - prev;
      while (d > std::numbers::pi_v<Scalar>) d -= 2 * std::numbers::pi_v<Scalar>;
      while (d <= -std::numbers::pi_v<Scalar>) d += 2 * std::numbers::pi_v<Scalar>;
      swept += d;
    }
    prev = phi;
  }
  const Scalar s2 = frame.fit().scale * frame.fit().scale;
  const Scalar ellipse =
      std::numbers::pi_v<Scalar> * std::abs(frame.F()) / std::pow(frame.S(), Scalar(1.5)) * s2;
  return {ellipse, ellipse * std::abs(swept) / (2 * std::numbers::pi_v<Scalar>)};
}

template <typename Scalar>
bool has_fine_area(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  const auto t = fine_area_terms(m, i);
  return t.ellipse >= t.sector;
}

/// Twice the transverse semi-axis of the hyperbola fitted at i.
template <typename Scalar>
Scalar fine_position_mu(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  const auto frame = affine_frame(m, i);
  if (frame.curvature_sign() >= 0) {
    throw Error(ErrorCode::WrongCurvatureSign, "fine position needs negative affine curvature at " + std::to_string(i));
  }
  const Scalar level = -frame.F() / frame.S();
  Eigen::SelfAdjointEigenSolver<Matrix2<Scalar>> eig(frame.fit().local.quadratic_part());
  for (int k = 1; k >= 0; --k) {
    const Scalar lambda = eig.eigenvalues()(k);
    if (lambda * level > 0) return 2 * std::sqrt(level / lambda) * frame.fit().scale;
  }
  throw Error(ErrorCode::NonRealMu, "no real transverse axis for the conic at " + std::to_string(i));
}

template <typename Scalar>
bool in_fine_position(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  const Scalar mu = fine_position_mu(m, i);
  for (int j = -2; j < 2; ++j) {
    if (!(chord(m, i + j, i + j + 1) < mu)) return false;
  }
  return true;
}

/// Fine area at every positively curved point, fine position at every
/// negatively curved one.
template <typename Scalar>
bool is_affine_fine(const Mesh<Scalar>& m) {
  for (auto row : m.indices_with_stencil(-2, 2)) {
    const auto i = std::ptrdiff_t(row);
    const int sign = affine_curvature_sign(m, i);
    if (sign > 0 && !has_fine_area(m, i)) return false;
    if (sign < 0 && !in_fine_position(m, i)) return false;
  }
  return true;
}

/// Area of the triangle p_{i-1} p_i p_{i+1}.
template <typename Scalar>
Scalar one_neighborhood_area(const Mesh<Scalar>& m, std::ptrdiff_t i) {
  return std::abs(triple_cross(m, i)) / 2;
}

}  // namespace jinsig
