#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "jinsig/error.hpp"
#include "jinsig/mesh.hpp"

namespace jinsig {

/// Eq1..Eq4 are the Euclidean parameterizations, Eq5..Eq8 the equiaffine ones.
enum class Scheme { Eq1 = 1, Eq2, Eq3, Eq4, Eq5, Eq6, Eq7, Eq8 };

constexpr int scheme_number(Scheme s) { return static_cast<int>(s); }
constexpr bool is_affine(Scheme s) { return scheme_number(s) >= 5; }

/// Eq1, Eq2, Eq5 and Eq6 assume an equally spaced mesh.
constexpr bool requires_equal_spacing(Scheme s) {
  return s == Scheme::Eq1 || s == Scheme::Eq2 || s == Scheme::Eq5 || s == Scheme::Eq6;
}

inline Scheme scheme_from_number(int k) {
  if (k < 1 || k > 8) throw Error(ErrorCode::OutOfDomain, "scheme must be 1..8, got " + std::to_string(k));
  return static_cast<Scheme>(k);
}

inline std::string to_string(Scheme s) { return "Eq" + std::to_string(scheme_number(s)); }

/// kappa_s = weight * (kappa_{i+upper} - kappa_{i+lower}) / length(i+from, i+to).
struct QuotientStencil {
  int upper;
  int lower;
  int from;
  int to;
  int weight;
};

constexpr QuotientStencil stencil(Scheme s) {
  switch (s) {
    case Scheme::Eq1: return {1, 0, 0, 1, 1};
    case Scheme::Eq2: return {1, -1, -1, 1, 1};
    case Scheme::Eq3: return {1, 0, -1, 2, 3};
    case Scheme::Eq4: return {1, -1, -3, 3, 3};
    case Scheme::Eq5: return {1, 0, 0, 1, 1};
    case Scheme::Eq6: return {1, -1, -1, 1, 1};
    case Scheme::Eq7: return {1, 0, -2, 3, 5};
    case Scheme::Eq8: return {1, -1, -5, 5, 5};
  }
  return {1, 0, 0, 1, 1};
}

template <typename Scalar>
struct SignaturePoint {
  std::size_t index;
  Scalar kappa;
  Scalar kappa_s;
};

/// Per-point (kappa, kappa_s) pairs plus the scales used for comparing them.
/// `kappa_scale` and `kappa_s_scale` are the natural magnitudes of each
/// column for this mesh; values well below them count as zero when compared.
template <typename Scalar>
struct Signature {
  std::vector<SignaturePoint<Scalar>> points;
  Scheme scheme = Scheme::Eq1;
  NeighborhoodSpec spec{};
  Scalar kappa_scale = 0;
  Scalar kappa_s_scale = 0;
  /// Arc lengths were evaluated with a conic fitted away from both endpoints.
  bool extrapolated = false;
};

/// Offsets [lo, hi] around i that a quotient stencil touches when every
/// curvature needs the neighbors i - before .. i + after.
struct StencilExtent {
  int lo;
  int hi;
};

constexpr StencilExtent stencil_extent(const QuotientStencil& q, int before, int after) {
  return {std::min(q.lower - before, q.from), std::max(q.upper + after, q.to)};
}

template <typename Scalar>
bool values_match(Scalar x, Scalar y, Scalar rtol, Scalar floor) {
  using std::abs;
  const Scalar scale = std::max({abs(x), abs(y), floor});
  return abs(x - y) <= rtol * scale;
}

/// Largest componentwise relative difference; infinity when the index sets differ.
template <typename Scalar>
Scalar signature_distance(const Signature<Scalar>& a, const Signature<Scalar>& b) {
  using std::abs;
  if (a.points.size() != b.points.size()) return std::numeric_limits<Scalar>::infinity();
  const Scalar kf = std::max(a.kappa_scale, b.kappa_scale);
  const Scalar sf = std::max(a.kappa_s_scale, b.kappa_s_scale);
  Scalar worst = 0;
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    const auto& p = a.points[k];
    const auto& q = b.points[k];
    if (p.index != q.index) return std::numeric_limits<Scalar>::infinity();
    const Scalar ks = std::max({abs(p.kappa), abs(q.kappa), kf});
    const Scalar ss = std::max({abs(p.kappa_s), abs(q.kappa_s), sf});
    if (ks > 0) worst = std::max(worst, abs(p.kappa - q.kappa) / ks);
    if (ss > 0) worst = std::max(worst, abs(p.kappa_s - q.kappa_s) / ss);
  }
  return worst;
}

template <typename Scalar>
bool signatures_equal(const Signature<Scalar>& a, const Signature<Scalar>& b,
                      Scalar rtol = Tolerance<Scalar>::signature) {
  return a.scheme == b.scheme && a.spec == b.spec && signature_distance(a, b) <= rtol;
}

}  // namespace jinsig
