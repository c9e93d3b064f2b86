#pragma once

#include <Eigen/Core>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jinsig/affine.hpp"
#include "jinsig/error.hpp"
#include "jinsig/euclidean.hpp"
#include "jinsig/geometry.hpp"
#include "jinsig/mesh.hpp"
#include "jinsig/motion.hpp"
#include "jinsig/signature.hpp"

namespace jinsig {

enum class Status { Congruent, NotCongruent, HypothesesNotMet };
enum class MatchMode { IndexAligned, Cyclic, CyclicWithReversal };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Congruent: return "Congruent";
    case Status::NotCongruent: return "NotCongruent";
    case Status::HypothesesNotMet: return "HypothesesNotMet";
  }
  return "?";
}

template <typename Scalar>
struct Verdict {
  Status status = Status::HypothesesNotMet;
  std::optional<GroupElement<Scalar>> witness;
  std::string reason;
  /// Correspondence used by the witness: q_j = g(p_{shift + j}), or
  /// q_j = g(p_{shift - j}) when reversed.
  std::size_t shift = 0;
  bool reversed = false;
  /// Largest |g(p) - q| over the mesh divided by the larger diameter.
  Scalar residual = std::numeric_limits<Scalar>::infinity();
  /// Hypotheses of a decision procedure held but the oracle found no motion.
  bool oracle_disagreement = false;

  bool congruent() const noexcept { return status == Status::Congruent; }
};

namespace detail {

template <typename Scalar>
std::vector<Point2<Scalar>> reindexed(const Mesh<Scalar>& m, std::size_t shift, bool reversed) {
  const auto n = std::ptrdiff_t(m.size());
  std::vector<Point2<Scalar>> out(m.size());
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const std::ptrdiff_t k = reversed ? std::ptrdiff_t(shift) - j : std::ptrdiff_t(shift) + j;
    out[std::size_t(j)] = m[std::size_t(((k % n) + n) % n)];
  }
  return out;
}

template <typename Scalar>
Point2<Scalar> mean(const std::vector<Point2<Scalar>>& pts) {
  Point2<Scalar> c = Point2<Scalar>::Zero();
  for (const auto& p : pts) c += p;
  return c / Scalar(pts.size());
}

/// Best rotation (optionally composed with the reflection y -> -y) in the
/// least-squares sense, plus the matching translation.
template <typename Scalar>
GroupElement<Scalar> procrustes(const std::vector<Point2<Scalar>>& p, const std::vector<Point2<Scalar>>& q,
                                Group group, bool reflect) {
  const Matrix2<Scalar> pre = reflect ? reflection_x<Scalar>() : Matrix2<Scalar>::Identity();
  const Point2<Scalar> pc = pre * mean(p);
  const Point2<Scalar> qc = mean(q);
  Scalar sx = 0, sd = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Point2<Scalar> x = pre * p[k] - pc;
    const Point2<Scalar> y = q[k] - qc;
    sx += cross2<Scalar>(x, y);
    sd += x.dot(y);
  }
  const Matrix2<Scalar> r = rotation<Scalar>(std::atan2(sx, sd));
  return GroupElement<Scalar>(group, r * pre, qc - r * pc);
}

/// Unimodular map sending the reference triple of p to that of q, rescaled to
/// |det| = 1. Empty when SA is requested and the map reverses orientation.
template <typename Scalar>
std::optional<GroupElement<Scalar>> affine_candidate(const std::vector<Point2<Scalar>>& p,
                                                     const std::vector<Point2<Scalar>>& q,
                                                     std::size_t a, std::size_t b, std::size_t c,
                                                     Group group) {
  Matrix2<Scalar> P, Q;
  P.col(0) = p[b] - p[a];
  P.col(1) = p[c] - p[a];
  Q.col(0) = q[b] - q[a];
  Q.col(1) = q[c] - q[a];
  Matrix2<Scalar> L = Q * P.inverse();
  const Scalar det = L.determinant();
  if (!std::isfinite(det) || det == 0) return std::nullopt;
  if (det < 0 && !allows_reflection(group)) return std::nullopt;
  L /= std::sqrt(std::abs(det));
  const Point2<Scalar> t = mean(q) - L * mean(p);
  return GroupElement<Scalar>(group, L, t);
}

template <typename Scalar>
Scalar max_deviation(const GroupElement<Scalar>& g, const std::vector<Point2<Scalar>>& p,
                     const std::vector<Point2<Scalar>>& q) {
  Scalar worst = 0;
  for (std::size_t k = 0; k < p.size(); ++k) worst = std::max(worst, (g.apply(p[k]) - q[k]).norm());
  return worst;
}

/// A well-conditioned non-collinear triple of m: the first point, the point
/// farthest from it, and the point farthest from the line through both.
template <typename Scalar>
std::array<std::size_t, 3> reference_triple(const Mesh<Scalar>& m) {
  std::size_t b = 1;
  for (std::size_t k = 1; k < m.size(); ++k)
    if ((m[k] - m[0]).squaredNorm() > (m[b] - m[0]).squaredNorm()) b = k;
  std::size_t c = 0;
  Scalar best = 0;
  for (std::size_t k = 1; k < m.size(); ++k) {
    const Scalar area = std::abs(cross2<Scalar>(m[b] - m[0], m[k] - m[0]));
    if (area > best) {
      best = area;
      c = k;
    }
  }
  if (!(best / 2 > Tolerance<Scalar>::collinear * m.diameter() * m.diameter())) {
    throw Error(ErrorCode::NoNonCollinearTriple, "every triple of the mesh is collinear");
  }
  return {0, std::min(b, c), std::max(b, c)};
}

}  // namespace detail

/// Exact congruence oracle: searches for g in `group` with q_j = g(p_j)
/// (or a cyclic relabelling of it) up to tol times the larger diameter.
template <typename Scalar>
Verdict<Scalar> align(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2, Group group,
                      MatchMode mode = MatchMode::IndexAligned,
                      Scalar tol = Tolerance<Scalar>::congruence) {
  if (m1.size() != m2.size()) {
    throw Error(ErrorCode::LengthMismatch, "meshes have " + std::to_string(m1.size()) + " and " +
                                               std::to_string(m2.size()) + " points");
  }
  if (mode != MatchMode::IndexAligned && !(m1.closed() && m2.closed())) {
    throw Error(ErrorCode::InvalidMode, "cyclic matching needs two closed meshes");
  }
  const std::vector<Point2<Scalar>> q(m2.points().begin(), m2.points().end());
  const Scalar scale = std::max(m1.diameter(), m2.diameter());
  std::array<std::size_t, 3> triple{};
  if (!is_euclidean(group)) {
    triple = detail::reference_triple(m1);
    (void)detail::reference_triple(m2);
  }

  Verdict<Scalar> best;
  best.status = Status::NotCongruent;
  const std::size_t shifts = mode == MatchMode::IndexAligned ? 1 : m1.size();
  const int orientations = mode == MatchMode::CyclicWithReversal ? 2 : 1;
  for (int o = 0; o < orientations; ++o) {
    for (std::size_t s = 0; s < shifts; ++s) {
      const auto p = detail::reindexed(m1, s, o == 1);
      std::vector<GroupElement<Scalar>> candidates;
      if (is_euclidean(group)) {
        candidates.push_back(detail::procrustes(p, q, group, false));
        if (allows_reflection(group)) candidates.push_back(detail::procrustes(p, q, group, true));
      } else {
        Mesh<Scalar> relabelled(p, m1.closed());
        const auto t = o == 0 && s == 0 ? triple : detail::reference_triple(relabelled);
        if (auto g = detail::affine_candidate(p, q, t[0], t[1], t[2], group)) candidates.push_back(*g);
      }
      for (const auto& g : candidates) {
        const Scalar r = detail::max_deviation(g, p, q) / scale;
        if (r < best.residual) {
          best.residual = r;
          best.witness = g;
          best.shift = s;
          best.reversed = o == 1;
        }
      }
    }
  }
  if (best.witness && best.residual <= tol) {
    best.status = Status::Congruent;
  } else {
    best.status = Status::NotCongruent;
    best.witness.reset();
    best.reason = "no " + std::string(to_string(group)) + " motion maps the first mesh onto the second";
  }
  return best;
}

struct DecideOptions {
  double congruence_tol = Tolerance<double>::congruence;
  double signature_tol = Tolerance<double>::signature;
  double angle_tol = Tolerance<double>::right_angle;
  double spacing_tol = Tolerance<double>::euclidean_spacing;
  double affine_spacing_tol = Tolerance<double>::affine_spacing;
};

namespace detail {

template <typename Scalar>
Verdict<Scalar> unmet(std::string reason) {
  Verdict<Scalar> v;
  v.status = Status::HypothesesNotMet;
  v.reason = std::move(reason);
  return v;
}

/// Hypotheses held: the oracle decides whether congruence follows.
template <typename Scalar>
Verdict<Scalar> conclude(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2, Group group,
                         const DecideOptions& opt) {
  auto v = align(m1, m2, group, MatchMode::IndexAligned, Scalar(opt.congruence_tol));
  if (!v.congruent()) {
    v.oracle_disagreement = true;
    v.reason = "hypotheses hold but the alignment oracle finds no motion";
  }
  return v;
}

template <typename Scalar>
std::optional<std::string> common_checks(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2) {
  if (m1.size() != m2.size()) {
    throw Error(ErrorCode::LengthMismatch, "meshes have " + std::to_string(m1.size()) + " and " +
                                               std::to_string(m2.size()) + " points");
  }
  if (m1.closed() != m2.closed()) return "one mesh is closed and the other open";
  if (!is_ordinary(m1) || !is_ordinary(m2)) return "mesh is not ordinary";
  return std::nullopt;
}

template <typename Scalar>
bool lengths_match(Scalar a, Scalar b, Scalar floor, const DecideOptions& opt) {
  return values_match(a, b, Scalar(opt.signature_tol), floor);
}

template <typename Scalar>
bool angles_match(Scalar a, Scalar b, const DecideOptions& opt) {
  return std::abs(a - b) <= Scalar(opt.signature_tol) * std::numbers::pi_v<Scalar>;
}

template <typename Scalar>
std::optional<std::string> spacing_check(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2,
                                         const DecideOptions& opt) {
  if (!is_equally_spaced(m1, Scalar(opt.spacing_tol)) || !is_equally_spaced(m2, Scalar(opt.spacing_tol))) {
    return "meshes are not both equally spaced";
  }
  return std::nullopt;
}

template <typename Scalar>
std::optional<std::string> direction_check(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2) {
  for (auto i : interior_indices(m1)) {
    if (signature_direction(m1, std::ptrdiff_t(i)) != signature_direction(m2, std::ptrdiff_t(i))) {
      return "signature-direction differs at index " + std::to_string(i);
    }
  }
  return std::nullopt;
}

/// Signed angle types agree; collinear triples must be collinear in both.
template <typename Scalar>
std::optional<std::string> signed_type_check(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2,
                                             NeighborhoodSpec spec, const DecideOptions& opt) {
  for (auto i : interior_indices(m1, spec)) {
    const Scalar a = signed_angle(m1, std::ptrdiff_t(i), spec);
    const Scalar b = signed_angle(m2, std::ptrdiff_t(i), spec);
    const bool za = a == 0, zb = b == 0;
    if (za != zb || (!za && signed_angle_type(a, Scalar(opt.angle_tol)) !=
                                signed_angle_type(b, Scalar(opt.angle_tol)))) {
      return "signed angle type differs at index " + std::to_string(i);
    }
  }
  return std::nullopt;
}

template <typename Scalar>
std::optional<std::string> signature_check(const Signature<Scalar>& a, const Signature<Scalar>& b,
                                           const DecideOptions& opt) {
  if (!signatures_equal(a, b, Scalar(opt.signature_tol))) {
    return to_string(a.scheme) + " signatures differ (relative distance " +
           std::to_string(double(signature_distance(a, b))) + ")";
  }
  return std::nullopt;
}

}  // namespace detail

#define JINSIG_REQUIRE(check)                                      \
  do {                                                             \
    if (auto why_ = (check)) return detail::unmet<Scalar>(*why_);  \
  } while (0)

/// Equally spaced, same signature-direction, equal Eq1 signatures.
template <typename Scalar>
Verdict<Scalar> decide_eq1(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2, const DecideOptions& opt = {}) {
  JINSIG_REQUIRE(detail::common_checks(m1, m2));
  JINSIG_REQUIRE(detail::spacing_check(m1, m2, opt));
  JINSIG_REQUIRE(detail::direction_check(m1, m2));
  const EuclideanOptions eo{opt.spacing_tol};
  JINSIG_REQUIRE(detail::signature_check(se_signature(m1, Scheme::Eq1, {}, eo),
                                         se_signature(m2, Scheme::Eq1, {}, eo), opt));
  return detail::conclude(m1, m2, Group::SE, opt);
}

enum class AngleTypeVariant { AngleType, Fine };

/// Equally spaced, same signature-direction, equal Eq2 signatures, and either
/// the same angle type everywhere or both meshes fine.
template <typename Scalar>
Verdict<Scalar> decide_eq2_angle_type(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2,
                                      AngleTypeVariant variant = AngleTypeVariant::AngleType,
                                      const DecideOptions& opt = {}) {
  JINSIG_REQUIRE(detail::common_checks(m1, m2));
  JINSIG_REQUIRE(detail::spacing_check(m1, m2, opt));
  JINSIG_REQUIRE(detail::direction_check(m1, m2));
  if (variant == AngleTypeVariant::AngleType) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    for (auto i : interior_indices(m1)) {
      const Scalar a = angle(m1, std::ptrdiff_t(i));
      const Scalar b = angle(m2, std::ptrdiff_t(i));
      const bool sa = a >= pi, sb = b >= pi;
      if (sa != sb || (!sa && angle_type(a, Scalar(opt.angle_tol)) != angle_type(b, Scalar(opt.angle_tol)))) {
        return detail::unmet<Scalar>("angle type differs at index " + std::to_string(i));
      }
    }
  } else if (!is_fine(m1, Scalar(opt.angle_tol)) || !is_fine(m2, Scalar(opt.angle_tol))) {
    return detail::unmet<Scalar>("meshes are not both fine");
  }
  const EuclideanOptions eo{opt.spacing_tol};
  JINSIG_REQUIRE(detail::signature_check(se_signature(m1, Scheme::Eq2, {}, eo),
                                         se_signature(m2, Scheme::Eq2, {}, eo), opt));
  return detail::conclude(m1, m2, Group::SE, opt);
}

enum class SignedVariant { SignedAngleType, SignedAngles };

/// Equally spaced with either the same signed angle type and equal Eq2
/// signatures, or equal signed angles in (0, pi) in magnitude and equal curvatures.
template <typename Scalar>
Verdict<Scalar> decide_eq2_signed(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2,
                                  SignedVariant variant = SignedVariant::SignedAngleType,
                                  const DecideOptions& opt = {}) {
  JINSIG_REQUIRE(detail::common_checks(m1, m2));
  JINSIG_REQUIRE(detail::spacing_check(m1, m2, opt));
  if (variant == SignedVariant::SignedAngleType) {
    JINSIG_REQUIRE(detail::signed_type_check(m1, m2, NeighborhoodSpec{}, opt));
    const EuclideanOptions eo{opt.spacing_tol};
    JINSIG_REQUIRE(detail::signature_check(se_signature(m1, Scheme::Eq2, {}, eo),
                                           se_signature(m2, Scheme::Eq2, {}, eo), opt));
  } else {
    const Scalar floor = Scalar(1) / std::max(m1.diameter(), m2.diameter());
    for (auto i : interior_indices(m1)) {
      const auto k = std::ptrdiff_t(i);
      const Scalar a = signed_angle(m1, k);
      const Scalar b = signed_angle(m2, k);
      if (a == 0 || b == 0) return detail::unmet<Scalar>("signed angle not in (0, pi) at index " + std::to_string(i));
      if (!detail::angles_match(a, b, opt)) {
        return detail::unmet<Scalar>("signed angles differ at index " + std::to_string(i));
      }
      if (!detail::lengths_match(euclidean_curvature(m1, k), euclidean_curvature(m2, k), floor, opt)) {
        return detail::unmet<Scalar>("curvatures differ at index " + std::to_string(i));
      }
    }
  }
  return detail::conclude(m1, m2, Group::SE, opt);
}

/// Equal chords d_{i-1,i+1}, same signed (1,2)-angle type, equal Eq3
/// signatures on the (1,2) neighborhood; open meshes also need equal final
/// chords d_{n-4,n-1}.
template <typename Scalar>
Verdict<Scalar> decide_eq3(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2, const DecideOptions& opt = {}) {
  JINSIG_REQUIRE(detail::common_checks(m1, m2));
  const NeighborhoodSpec spec{1, 2};
  const auto s1 = se_signature(m1, Scheme::Eq3, spec);
  const auto s2 = se_signature(m2, Scheme::Eq3, spec);
  const Scalar floor = std::max(m1.diameter(), m2.diameter());
  for (auto i : interior_indices(m1)) {
    const auto k = std::ptrdiff_t(i);
    if (!detail::lengths_match(chord(m1, k - 1, k + 1), chord(m2, k - 1, k + 1), floor, opt)) {
      return detail::unmet<Scalar>("chord d(i-1,i+1) differs at index " + std::to_string(i));
    }
  }
  JINSIG_REQUIRE(detail::signed_type_check(m1, m2, spec, opt));
  if (!m1.closed()) {
    const auto n = std::ptrdiff_t(m1.size());
    if (!detail::lengths_match(chord(m1, n - 4, n - 1), chord(m2, n - 4, n - 1), floor, opt)) {
      return detail::unmet<Scalar>("final (1,2) chord differs");
    }
  }
  JINSIG_REQUIRE(detail::signature_check(s1, s2, opt));
  return detail::conclude(m1, m2, Group::SE, opt);
}

/// How the open-mesh ends are certified in decide_eq4.
enum class EndpointCondition { Angle90, EqualAngles, Either };

namespace detail {

template <typename Scalar>
std::optional<std::string> three_step_checks(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2,
                                             const DecideOptions& opt) {
  const NeighborhoodSpec spec3{3, 3};
  const auto s1 = se_signature(m1, Scheme::Eq4, spec3);
  const auto s2 = se_signature(m2, Scheme::Eq4, spec3);
  if (auto why = signed_type_check(m1, m2, spec3, opt)) return why;
  const Scalar floor = std::max(m1.diameter(), m2.diameter());
  for (auto i : interior_indices(m1, spec3)) {
    const auto k = std::ptrdiff_t(i);
    if (!lengths_match(chord(m1, k - 3, k), chord(m2, k - 3, k), floor, opt)) {
      return "chord d(i-3,i) differs at index " + std::to_string(i);
    }
  }
  return signature_check(s1, s2, opt);
}

}  // namespace detail

/// Equal (3,1)-curvatures and signed (3,1)-angles, same signed 3-angle type,
/// equal chords d_{i-3,i}, equal Eq4 signatures on the 3-neighborhood, plus
/// an end condition for open meshes.
template <typename Scalar>
Verdict<Scalar> decide_eq4(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2,
                           EndpointCondition ends = EndpointCondition::Either,
                           const DecideOptions& opt = {}) {
  JINSIG_REQUIRE(detail::common_checks(m1, m2));
  if (!m1.closed() && m1.size() <= 7) {
    throw Error(ErrorCode::MeshTooShort, "open meshes need more than 7 points");
  }
  const NeighborhoodSpec spec31{3, 1};
  const Scalar kfloor = Scalar(1) / std::max(m1.diameter(), m2.diameter());
  for (auto i : interior_indices(m1, spec31)) {
    const auto k = std::ptrdiff_t(i);
    if (!detail::lengths_match(euclidean_curvature(m1, k, spec31), euclidean_curvature(m2, k, spec31), kfloor, opt)) {
      return detail::unmet<Scalar>("(3,1)-curvature differs at index " + std::to_string(i));
    }
    if (!detail::angles_match(signed_angle(m1, k, spec31), signed_angle(m2, k, spec31), opt)) {
      return detail::unmet<Scalar>("signed (3,1)-angle differs at index " + std::to_string(i));
    }
  }
  JINSIG_REQUIRE(detail::three_step_checks(m1, m2, opt));
  if (!m1.closed()) {
    const auto n = std::ptrdiff_t(m1.size());
    const NeighborhoodSpec spec3{3, 3};
    constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / 2;
    bool wide = true, equal = true;
    for (std::ptrdiff_t k : {std::ptrdiff_t(3), n - 4}) {
      const Scalar a = signed_angle(m1, k, spec3);
      const Scalar b = signed_angle(m2, k, spec3);
      wide = wide && std::abs(a) >= half_pi && std::abs(b) >= half_pi;
      equal = equal && detail::angles_match(a, b, opt);
    }
    const bool ok = ends == EndpointCondition::Angle90   ? wide
                    : ends == EndpointCondition::EqualAngles ? equal
                                                             : (wide || equal);
    if (!ok) return detail::unmet<Scalar>("end condition on the 3-angles at indices 3 and n-4 fails");
  }
  return detail::conclude(m1, m2, Group::SE, opt);
}

/// Closed meshes with n not divisible by 3: the step-3 traversal links every
/// point, so the 3-neighborhood data determine the mesh.
template <typename Scalar>
Verdict<Scalar> decide_host(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2, const DecideOptions& opt = {}) {
  if (!m1.closed() || !m2.closed()) throw Error(ErrorCode::NotClosed, "host decision needs closed meshes");
  JINSIG_REQUIRE(detail::common_checks(m1, m2));
  if (m1.size() % 3 == 0) {
    return detail::unmet<Scalar>("n = " + std::to_string(m1.size()) + " is divisible by 3");
  }
  JINSIG_REQUIRE(detail::three_step_checks(m1, m2, opt));
  return detail::conclude(m1, m2, Group::SE, opt);
}

enum class AffineVariant { NonzeroCurvature, ZeroCurvatureAreas, Fine };

/// Convex meshes with equal arc-length sets and Eq6 signatures, plus the
/// fineness and zero-curvature conditions selected by `variant`.
template <typename Scalar>
Verdict<Scalar> decide_affine(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2,
                              AffineVariant variant = AffineVariant::NonzeroCurvature, const DecideOptions& opt = {},
                              AffineSpacing spacing = AffineSpacing::ArcLength) {
  if (!is_convex(m1) || !is_convex(m2)) throw Error(ErrorCode::NotConvex, "affine decision needs convex meshes");
  JINSIG_REQUIRE(detail::common_checks(m1, m2));
  if (variant == AffineVariant::Fine) {
    if (!is_fine(m1, Scalar(opt.angle_tol)) || !is_fine(m2, Scalar(opt.angle_tol))) {
      return detail::unmet<Scalar>("meshes are not both fine");
    }
  } else if (!is_affine_fine(m1) || !is_affine_fine(m2)) {
    return detail::unmet<Scalar>("meshes are not both A-fine");
  }
  const auto rows = m1.indices_with_stencil(-2, 2);
  const Scalar lfloor = std::pow(std::max(affine_length_scale(m1), affine_length_scale(m2)), Scalar(2) / 3);
  const Scalar afloor = lfloor * lfloor * lfloor;
  for (auto row : rows) {
    const auto i = std::ptrdiff_t(row);
    const int s1 = affine_curvature_sign(m1, i);
    const int s2 = affine_curvature_sign(m2, i);
    if (variant == AffineVariant::NonzeroCurvature && (s1 == 0 || s2 == 0)) {
      return detail::unmet<Scalar>("zero affine curvature at index " + std::to_string(row));
    }
    if ((s1 == 0 || s2 == 0) &&
        !detail::lengths_match(one_neighborhood_area(m1, i), one_neighborhood_area(m2, i), afloor, opt)) {
      return detail::unmet<Scalar>("one-neighborhood areas differ at zero-curvature index " + std::to_string(row));
    }
    const auto a = arc_length_set(m1, i);
    const auto b = arc_length_set(m2, i);
    for (int j = 0; j < 4; ++j) {
      if (!detail::lengths_match(a[j], b[j], lfloor, opt)) {
        return detail::unmet<Scalar>("arc length sets differ at index " + std::to_string(row));
      }
    }
  }
  const AffineOptions ao{spacing, opt.affine_spacing_tol};
  try {
    JINSIG_REQUIRE(detail::signature_check(sa_signature(m1, Scheme::Eq6, ao), sa_signature(m2, Scheme::Eq6, ao), opt));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SchemeSpacingMismatch) throw;
    return detail::unmet<Scalar>("meshes are not both equally spaced in affine arc length");
  }
  return detail::conclude(m1, m2, Group::SA, opt);
}

/// Equal consecutive distances and equal signed angles.
template <typename Scalar>
Verdict<Scalar> decide_dist_angle(const Mesh<Scalar>& m1, const Mesh<Scalar>& m2, const DecideOptions& opt = {}) {
  JINSIG_REQUIRE(detail::common_checks(m1, m2));
  const auto e1 = edge_lengths(m1);
  const auto e2 = edge_lengths(m2);
  const Scalar floor = std::max(m1.diameter(), m2.diameter());
  for (std::size_t k = 0; k < e1.size(); ++k) {
    if (!detail::lengths_match(e1[k], e2[k], floor, opt)) {
      return detail::unmet<Scalar>("edge " + std::to_string(k) + " lengths differ");
    }
  }
  for (auto i : interior_indices(m1)) {
    if (!detail::angles_match(signed_angle(m1, std::ptrdiff_t(i)), signed_angle(m2, std::ptrdiff_t(i)), opt)) {
      return detail::unmet<Scalar>("signed angles differ at index " + std::to_string(i));
    }
  }
  return detail::conclude(m1, m2, Group::SE, opt);
}

#undef JINSIG_REQUIRE

}  // namespace jinsig
