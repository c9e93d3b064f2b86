// Acceptance suite: one PASS/FAIL line per criterion, with pinned tolerances
// and wall-clock limits. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jinsig/host.hpp"
#include "jinsig/jinsig.hpp"
#include "jinsig/sampling.hpp"

using namespace jinsig;
using Rng = std::mt19937_64;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

/// Circumradius from the perpendicular-bisector system, in long double.
long double bisector_radius(const Point2<double>& p, const Point2<double>& q, const Point2<double>& r) {
  const long double bx = (long double)q.x() - p.x(), by = (long double)q.y() - p.y();
  const long double cx = (long double)r.x() - p.x(), cy = (long double)r.y() - p.y();
  const long double d = 2 * (bx * cy - by * cx);
  const long double ux = (cy * (bx * bx + by * by) - by * (cx * cx + cy * cy)) / d;
  const long double uy = (bx * (cx * cx + cy * cy) - cx * (bx * bx + by * by)) / d;
  return std::sqrt(ux * ux + uy * uy);
}

/// Largest |w(p_i) - q_i| relative to the diameter of the second mesh.
double witness_error(const GroupElement<double>& w, const Mesh2d& a, const Mesh2d& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (w.apply(a[i]) - b[i]).norm());
  return worst / b.diameter();
}

/// Pairwise distances in index order: equal for index-aligned E-congruent meshes.
std::vector<double> distance_profile(const Mesh2d& m) {
  std::vector<double> d;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) d.push_back((m[i] - m[j]).norm());
  return d;
}

bool same_profile(const Mesh2d& a, const Mesh2d& b, double tol) {
  const auto x = distance_profile(a), y = distance_profile(b);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (std::abs(x[k] - y[k]) > tol * std::max(a.diameter(), b.diameter())) return false;
  return true;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome unit_circle_curvature() {
  Outcome out;
  Rng rng(101);
  std::uniform_real_distribution<double> phi(0, 2 * std::numbers::pi);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> a{phi(rng), phi(rng), phi(rng)};
    std::sort(a.begin(), a.end());
    if (a[1] - a[0] < 1e-3 || a[2] - a[1] < 1e-3 || 2 * std::numbers::pi - (a[2] - a[0]) < 1e-3) continue;
    const Mesh2d m({on_circle(1.0, a[0]), on_circle(1.0, a[1]), on_circle(1.0, a[2])});
    worst = std::max(worst, std::abs(euclidean_curvature(m, 1) - 1));
  }
  if (worst > 1e-9) out.fail("max |kappa - 1| = " + fmt(worst));
  out.detail = out.pass ? "max |kappa - 1| = " + fmt(worst) : out.detail;
  return out;
}

Outcome curvature_vs_circumradius() {
  Outcome out;
  Rng rng(202);
  std::uniform_real_distribution<double> u(-10, 10);
  double worst = 0;
  int used = 0;
  while (used < 10000) {
    const Point2<double> p(u(rng), u(rng)), q(u(rng), u(rng)), r(u(rng), u(rng));
    const double scale = std::max({(q - p).squaredNorm(), (r - p).squaredNorm(), (r - q).squaredNorm()});
    if (std::abs(cross2<double>(q - p, r - p)) < 1e-6 * scale) continue;
    ++used;
    const double k = menger_curvature(p, q, r);
    const double oracle = double(1.0L / bisector_radius(p, q, r));
    worst = std::max(worst, std::abs(k - oracle) / k);
  }
  if (worst > 1e-9) out.fail("max relative error " + fmt(worst));
  if (out.pass) out.detail = "max relative error " + fmt(worst);
  return out;
}

Outcome signature_invariance() {
  Outcome out;
  Rng rng(303);
  double worst_e = 0, worst_a = 0;
  for (int t = 0; t < 200; ++t) {
    const auto equal = sampling::random_turtle<double>(rng, 12, true);
    const auto unequal = sampling::random_turtle<double>(rng, 12, false);
    for (Group group : {Group::SE, Group::E}) {
      const auto g = random_motion<double>(group, rng);
      for (Scheme s : {Scheme::Eq1, Scheme::Eq2, Scheme::Eq3, Scheme::Eq4}) {
        const auto& m = requires_equal_spacing(s) ? equal : unequal;
        worst_e = std::max(worst_e, signature_distance(se_signature(m, s), se_signature(apply_motion(g, m), s)));
      }
    }
    const auto ell = sampling::random_ellipse_arc<double>(rng, 13, true);
    const auto arc = sampling::random_convex_arc<double>(rng, 13);
    const auto g = random_motion<double>(Group::SA, rng);
    for (Scheme s : {Scheme::Eq5, Scheme::Eq6, Scheme::Eq7, Scheme::Eq8}) {
      const auto& m = requires_equal_spacing(s) ? ell : arc;
      worst_a = std::max(worst_a, signature_distance(sa_signature(m, s), sa_signature(apply_motion(g, m), s)));
    }
  }
  if (worst_e > 1e-9) out.fail("Euclidean schemes differ by " + fmt(worst_e));
  if (worst_a > 1e-8) out.fail("affine schemes differ by " + fmt(worst_a));
  if (out.pass) out.detail = "worst Euclidean " + fmt(worst_e) + ", affine " + fmt(worst_a);
  return out;
}

Outcome counterexample_reproduction() {
  Outcome out;
  const auto ex1 = counterexample(CounterexampleId::Ex1);
  const auto ex2 = counterexample(CounterexampleId::Ex2);
  const auto ex3 = counterexample(CounterexampleId::Ex3);
  if (std::abs(euclidean_curvature(ex1.a, 1) - euclidean_curvature(ex1.b, 1)) > 1e-9) out.fail("Ex1 curvatures differ");
  if (std::abs(euclidean_curvature(ex2.a, 1) - euclidean_curvature(ex2.b, 1)) > 1e-9) out.fail("Ex2 curvatures differ");
  if (signature_distance(se_signature(ex3.a, Scheme::Eq2), se_signature(ex3.b, Scheme::Eq2)) > 1e-9) {
    out.fail("Ex3 signatures differ");
  }
  for (const auto* ex : {&ex1, &ex2, &ex3}) {
    if (align(ex->a, ex->b, Group::SE).congruent()) out.fail(std::string(to_string(ex->id)) + " SE-congruent");
  }
  // Independent certificates: different distance profiles rule out E-congruence.
  if (same_profile(ex1.a, ex1.b, 1e-9)) out.fail("Ex1 distance profiles agree");
  if (same_profile(ex3.a, ex3.b, 1e-9)) out.fail("Ex3 distance profiles agree");
  const auto e2 = align(ex2.a, ex2.b, Group::E);
  if (!e2.congruent() || !e2.witness->reflects()) out.fail("Ex2 not congruent by a reflection");
  else if (witness_error(*e2.witness, ex2.a, ex2.b) > 1e-9) out.fail("Ex2 witness misses");
  if (out.pass) out.detail = "Ex1-3 NotCongruent (SE), Ex2 Congruent (E)";
  return out;
}

struct Procedure {
  const char* name;
  std::function<Verdict<double>(const Mesh2d&, const Mesh2d&)> decide;
  std::function<Mesh2d(Rng&)> mesh;
  Group group;
};

Outcome decision_soundness() {
  Outcome out;
  const std::vector<Procedure> procs{
      {"eq1", [](auto& a, auto& b) { return decide_eq1(a, b); },
       [](Rng& r) { return sampling::random_turtle<double>(r, 10, true); }, Group::SE},
      {"eq2-angle-type", [](auto& a, auto& b) { return decide_eq2_angle_type(a, b); },
       [](Rng& r) { return sampling::random_turtle<double>(r, 10, true); }, Group::SE},
      {"eq2-signed", [](auto& a, auto& b) { return decide_eq2_signed(a, b); },
       [](Rng& r) { return sampling::random_turtle<double>(r, 10, true); }, Group::SE},
      {"eq3", [](auto& a, auto& b) { return decide_eq3(a, b); },
       [](Rng& r) { return sampling::random_turtle<double>(r, 10, false); }, Group::SE},
      {"eq4", [](auto& a, auto& b) { return decide_eq4(a, b); },
       [](Rng& r) { return sampling::random_turtle<double>(r, 12, false); }, Group::SE},
      {"affine", [](auto& a, auto& b) { return decide_affine(a, b); },
       [](Rng& r) { return sampling::random_ellipse_arc<double>(r, 11, true); }, Group::SA},
  };
  Rng rng(505);
  std::ostringstream summary;
  for (const auto& proc : procs) {
    int congruent = 0, disagreements = 0;
    double worst = 0;
    for (int t = 0; t < 200; ++t) {
      const auto m = proc.mesh(rng);
      const auto g = random_motion<double>(proc.group, rng);
      const auto v = proc.decide(m, apply_motion(g, m));
      if (v.oracle_disagreement) ++disagreements;
      if (!v.congruent()) {
        out.fail(std::string(proc.name) + " trial " + std::to_string(t) + ": " + std::string(to_string(v.status)) +
                 " (" + v.reason + ")");
        continue;
      }
      ++congruent;
      worst = std::max(worst, witness_error(*v.witness, m, apply_motion(g, m)));
    }
    if (disagreements > 0) out.fail(std::string(proc.name) + ": " + std::to_string(disagreements) + " disagreements");
    if (worst > 1e-6) out.fail(std::string(proc.name) + ": witness error " + fmt(worst));
    summary << proc.name << " " << congruent << "/200 ";
  }
  if (out.pass) out.detail = summary.str();
  return out;
}

Outcome classification_counts() {
  Outcome out;
  const auto check = [&](double kappa, double base, std::size_t expected) {
    const auto ws = classification_witnesses(kappa, base);
    if (ws.size() != expected) {
      out.fail("kappa*d = " + fmt(kappa * base) + " gave " + std::to_string(ws.size()) + " meshes");
      return;
    }
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (std::abs(euclidean_curvature(ws[i], 1) - kappa) > 1e-9 * kappa) out.fail("witness curvature off");
      if ((ws[i][0] - ws[i][2]).norm() - base > 1e-9 * base) out.fail("witness base off");
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        if (align(ws[i], ws[j], Group::SE).congruent()) {
          out.fail("witnesses " + std::to_string(i) + "," + std::to_string(j) + " congruent");
        }
      }
    }
  };
  check(1.0, 1.0, 4);
  check(0.5, 3.0, 4);
  check(2.0, 0.3, 4);
  check(1.0, 2.0, 2);
  check(0.25, 8.0, 2);
  if (out.pass) out.detail = "4 classes below kappa*d = 2, 2 classes at it";
  return out;
}

Outcome affine_curvature_values() {
  Outcome out;
  std::ostringstream s;
  for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {3.0, 0.5}}) {
    const auto m = sampling::ellipse_arc(a, b, 0.2, std::vector<double>(8, 0.3));
    const double expect = std::pow(a * b, -2.0 / 3);
    for (auto i : m.indices_with_stencil(-2, 2)) {
      const double k = affine_curvature(m, std::ptrdiff_t(i));
      if (std::abs(k - expect) > 1e-6 * expect) out.fail("ellipse (" + fmt(a) + "," + fmt(b) + "): " + fmt(k));
    }
  }
  std::vector<Point2<double>> parabola, hyperbola;
  for (int k = -4; k <= 4; ++k) {
    const double x = 0.37 * k + 0.1;
    parabola.emplace_back(x, 0.8 * x * x - 0.3 * x + 1);
    hyperbola.emplace_back(std::cosh(0.25 * k), std::sinh(0.25 * k));
  }
  const Mesh2d par(parabola), hyp(hyperbola);
  double par_worst = 0;
  for (auto i : par.indices_with_stencil(-2, 2)) {
    par_worst = std::max(par_worst, std::abs(affine_curvature(par, std::ptrdiff_t(i))));
    if (!(affine_curvature(hyp, std::ptrdiff_t(i)) < 0)) out.fail("hyperbola curvature not negative");
  }
  if (par_worst > 1e-9) out.fail("parabola |kappa_A| = " + fmt(par_worst));
  if (out.pass) out.detail = "ellipses within 1e-6, parabola max " + fmt(par_worst) + ", hyperbola negative";
  return out;
}

Outcome host_traversal() {
  Outcome out;
  for (std::int64_t n = 3; n <= 500 && out.pass; ++n) {
    for (std::int64_t m = 1; m < n; ++m) {
      const auto t = traverse(n, m);
      // Independent oracle: mark visited indices.
      std::vector<char> seen(std::size_t(n), 0);
      for (auto k : t.order) seen[std::size_t(k)] = 1;
      const bool all = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
      if (t.complete != (std::gcd(m, n) == 1) || all != t.complete) {
        out.fail("n = " + std::to_string(n) + ", m = " + std::to_string(m));
        break;
      }
    }
  }
  for (std::int64_t n = 2; n <= 10000 && out.pass; ++n) {
    const auto count = std::int64_t(valid_steps(n).size());
    if (count != euler_phi(n)) out.fail("phi(" + std::to_string(n) + ")");
  }
  if (!traverse(10, 3).complete) out.fail("(10,3) incomplete");
  const auto t4 = traverse(10, 4);
  if (t4.complete || t4.steps() != 5 || t4.order != std::vector<std::int64_t>{0, 4, 8, 2, 6, 0}) out.fail("(10,4) wrong");
  if (!traverse(40, 3).complete || std::gcd(3, 40) != 1) out.fail("(40,3) incomplete");
  if (out.pass) out.detail = "n <= 500 exhaustive, phi to 10^4, (10,3) (10,4) (40,3)";
  return out;
}

Outcome reflection_sign_contract() {
  Outcome out;
  Rng rng(909);
  long checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto m = sampling::random_turtle<double>(rng, 10, false);
    const auto rot = random_motion<double>(Group::SE, rng);
    const GroupElement<double> refl(Group::E, rot.linear() * reflection_x<double>(), rot.translation());
    const auto mr = apply_motion(rot, m), mf = apply_motion(refl, m);
    for (auto i : interior_indices(m)) {
      const auto k = std::ptrdiff_t(i);
      const int s = signature_sign(m, k);
      if (s == 0) out.fail("degenerate random mesh");
      if (signature_sign(mr, k) != s) out.fail("rotation changed a sign");
      if (signature_sign(mf, k) != -s) out.fail("reflection kept a sign");
      ++checked;
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " interior points";
  return out;
}

Outcome refinement_consistency() {
  Outcome out;
  const double R = 2.5;
  // Equal-angle circle samples carry no discretization error, so what remains
  // is rounding, which grows like eps / h^2 in kappa_s. Differences below this
  // floor are not ordered.
  const double floor = 1e-10;
  std::vector<double> errors;
  for (std::size_t n : {16u, 32u, 64u, 128u}) {
    const auto m = sampling::circle_samples<double>(n, R, std::numbers::pi, false, 0.3);
    const auto sig = se_signature(m, Scheme::Eq2);
    double err = 0;
    for (const auto& p : sig.points) err = std::max({err, std::abs(p.kappa - 1 / R), std::abs(p.kappa_s)});
    errors.push_back(err);
  }
  std::ostringstream s;
  for (std::size_t k = 0; k < errors.size(); ++k) {
    s << (k ? " " : "") << fmt(errors[k]);
    if (errors[k] > floor && k > 0 && !(errors[k] <= errors[k - 1])) out.fail("error grew: " + s.str());
  }
  if (errors.back() > floor) out.fail("finest error " + fmt(errors.back()));
  if (out.pass) out.detail = "errors " + s.str() + " (floor " + fmt(floor) + ")";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "unit-circle curvature", 1000, unit_circle_curvature},
      {2, "curvature vs circumradius", 1000, curvature_vs_circumradius},
      {3, "signature invariance", 30000, signature_invariance},
      {4, "counterexample reproduction", 1000, counterexample_reproduction},
      {5, "decision-procedure soundness", 60000, decision_soundness},
      {6, "classification counts", 1000, classification_counts},
      {7, "affine curvature values", 1000, affine_curvature_values},
      {8, "step traversal and totient", 5000, host_traversal},
      {9, "reflection sign contract", 5000, reflection_sign_contract},
      {10, "refinement consistency", 5000, refinement_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("threw ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms > c.limit_ms) o.fail("took " + fmt(ms) + " ms");
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %-30s %8.1f ms (limit %6.0f)  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, ms,
                c.limit_ms, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed;
}
