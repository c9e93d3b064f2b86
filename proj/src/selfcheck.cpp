#include "jinsig/selfcheck.hpp"

#include <functional>
#include <random>

#include "jinsig/affine.hpp"
#include "jinsig/congruence.hpp"
#include "jinsig/euclidean.hpp"
#include "jinsig/geometry.hpp"
#include "jinsig/motion.hpp"
#include "jinsig/sampling.hpp"

namespace jinsig {
namespace {

using Rng = std::mt19937_64;

/// A trial returns an empty string on success, otherwise a description.
using Trial = std::function<std::string(Rng&)>;

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials, const Trial& trial) {
  SuiteResult r{name, trials, 0, {}};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::string why;
    try {
      why = trial(rng);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!why.empty()) {
      if (r.failures == 0) r.first_failure = "trial " + std::to_string(t) + ": " + why;
      ++r.failures;
    }
  }
  return r;
}

std::string se_invariance(Rng& rng) {
  const Group group = std::bernoulli_distribution(0.5)(rng) ? Group::SE : Group::E;
  const auto g = random_motion<double>(group, rng);
  const auto equal = sampling::random_turtle<double>(rng, 12, true);
  const auto unequal = sampling::random_turtle<double>(rng, 12, false);
  for (Scheme s : {Scheme::Eq1, Scheme::Eq2, Scheme::Eq3, Scheme::Eq4}) {
    const auto& m = requires_equal_spacing(s) ? equal : unequal;
    const double d = signature_distance(se_signature(m, s), se_signature(apply_motion(g, m), s));
    if (!(d <= 1e-9)) return to_string(s) + " changed by " + std::to_string(d);
  }
  return {};
}

std::string sa_invariance(Rng& rng) {
  const auto g = random_motion<double>(Group::SA, rng);
  const auto equal = sampling::random_ellipse_arc<double>(rng, 13, true);
  const auto unequal = sampling::random_convex_arc<double>(rng, 13);
  for (Scheme s : {Scheme::Eq5, Scheme::Eq6, Scheme::Eq7, Scheme::Eq8}) {
    const auto& m = requires_equal_spacing(s) ? equal : unequal;
    const double d = signature_distance(sa_signature(m, s), sa_signature(apply_motion(g, m), s));
    if (!(d <= 1e-8)) return to_string(s) + " changed by " + std::to_string(d);
  }
  return {};
}

std::string sign_contract(Rng& rng) {
  const auto m = sampling::random_turtle<double>(rng, 10, false);
  const auto rot = random_motion<double>(Group::SE, rng);
  const GroupElement<double> refl(Group::E, rot.linear() * reflection_x<double>(), rot.translation());
  const auto mr = apply_motion(rot, m);
  const auto mf = apply_motion(refl, m);
  for (auto i : interior_indices(m)) {
    const auto k = std::ptrdiff_t(i);
    if (signature_sign(mr, k) != signature_sign(m, k)) return "rotation changed the sign at " + std::to_string(i);
    if (signature_sign(mf, k) != -signature_sign(m, k)) return "reflection kept the sign at " + std::to_string(i);
  }
  return {};
}

std::string oracle_recovery(Rng& rng) {
  for (Group group : {Group::SE, Group::E, Group::SA, Group::Abar}) {
    const auto m = sampling::random_turtle<double>(rng, 8, false);
    const auto g = random_motion<double>(group, rng);
    const auto v = align(m, apply_motion(g, m), group);
    if (!v.congruent()) return "align missed a " + std::string(to_string(group)) + " motion";
    for (const auto& p : m.points()) {
      if ((v.witness->apply(p) - g.apply(p)).norm() > 1e-9 * (1 + g.apply(p).norm())) {
        return "recovered " + std::string(to_string(group)) + " motion differs";
      }
    }
  }
  return {};
}

std::string motion_roundtrip(Rng& rng) {
  const auto m = sampling::random_turtle<double>(rng, 6, false);
  const auto g = random_motion<double>(Group::Abar, rng);
  const auto back = apply_motion(g.inverse(), apply_motion(g, m));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if ((back[i] - m[i]).norm() > 1e-9 * m.diameter()) return "g^-1 g moved point " + std::to_string(i);
  }
  return {};
}

std::string curvature_vs_circle(Rng& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const Point2<double> p(u(rng), u(rng)), q(u(rng), u(rng)), r(u(rng), u(rng));
  const double scale = std::max({(q - p).squaredNorm(), (r - p).squaredNorm(), (r - q).squaredNorm()});
  if (std::abs(cross2<double>(q - p, r - p)) < 1e-6 * scale) return {};
  const double k = menger_curvature<double>(p, q, r);
  const double inv_r = 1.0 / circumcircle<double>(p, q, r).radius;
  if (std::abs(k - inv_r) > 1e-9 * k) return "curvature differs from the circumcircle";
  return {};
}

std::string dist_angle_vs_oracle(Rng& rng) {
  const auto m = sampling::random_turtle<double>(rng, 9, false);
  const bool congruent = std::bernoulli_distribution(0.5)(rng);
  const auto other = congruent ? apply_motion(random_motion<double>(Group::SE, rng), m)
                               : sampling::random_turtle<double>(rng, 9, false);
  const auto v = decide_dist_angle(m, other);
  const auto o = align(m, other, Group::SE);
  if (v.oracle_disagreement) return "hypotheses held without congruence";
  if ((v.status == Status::Congruent) != o.congruent()) return "decision and oracle disagree";
  return {};
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, int trials) {
  std::vector<SuiteResult> out;
  const std::pair<const char*, Trial> suites[] = {
      {"se-signature-invariance", se_invariance},
      {"sa-signature-invariance", sa_invariance},
      {"signature-sign-contract", sign_contract},
      {"oracle-recovery", oracle_recovery},
      {"motion-roundtrip", motion_roundtrip},
      {"curvature-vs-circumcircle", curvature_vs_circle},
      {"dist-angle-vs-oracle", dist_angle_vs_oracle},
  };
  std::uint64_t k = 0;
  for (const auto& [name, trial] : suites) out.push_back(run_suite(name, seed * 1000003u + k++, trials, trial));
  return out;
}

}  // namespace jinsig
