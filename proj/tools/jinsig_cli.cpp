// Command-line front end: signatures, congruence decisions, counterexamples,
// host traversals and the randomized self-check.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jinsig/jinsig.hpp"
#include "jinsig/io.hpp"
#include "jinsig/sampling.hpp"
#include "jinsig/selfcheck.hpp"
#include "jinsig/svg.hpp"

namespace {

using namespace jinsig;

enum Exit : int {
  kOk = 0,
  kNotCongruent = 1,
  kParse = 2,
  kSpacing = 3,
  kHypotheses = 4,
  kMismatch = 5,
  kFailure = 6,
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)); }

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::SchemeSpacingMismatch: return kSpacing;
    default: return kFailure;
  }
}

Mesh2d load(const std::string& path, bool force_closed) {
  auto m = io::read_mesh(path);
  if (force_closed && !m.closed()) {
    m = Mesh2d(std::vector<Point2<double>>(m.points().begin(), m.points().end()), true, m.label());
  }
  return m;
}

struct SignatureArgs {
  std::string input;
  std::string group = "se";
  int scheme = 2;
  int m1 = 1;
  int m2 = 1;
  std::string out;
  std::string plot;
  bool closed = false;
  double spacing_tol = -1;
  std::string affine_spacing = "arc";
};

std::string describe_missing_rows(const Mesh2d& m, const Signature<double>& sig) {
  std::vector<std::size_t> missing;
  std::size_t next = 0;
  for (const auto& p : sig.points) {
    while (next < p.index) missing.push_back(next++);
    next = p.index + 1;
  }
  while (next < m.size()) missing.push_back(next++);
  std::string s;
  for (auto i : missing) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

int run_signature(const SignatureArgs& a) {
  const bool affine = a.group == "sa";
  const Scheme scheme = scheme_from_number(a.scheme);
  if (is_affine(scheme) != affine) {
    std::cerr << "error: scheme " << a.scheme << " does not belong to group " << a.group
              << " (1-4 are se, 5-8 are sa)\n";
    return kMismatch;
  }
  const Mesh2d m = load(a.input, a.closed);
  Signature<double> sig;
  io::Provenance prov;
  prov["group"] = a.group;
  prov["scheme"] = to_string(scheme);
  prov["points"] = std::to_string(m.size());
  prov["closed"] = m.closed() ? "true" : "false";
  prov["index_base"] = "0";
  prov["collinear_tol"] = io::format_real(Tolerance<double>::collinear);
  prov["coincident_tol"] = io::format_real(Tolerance<double>::coincident);
  if (affine) {
    AffineOptions opt;
    opt.spacing = a.affine_spacing == "euclidean" ? AffineSpacing::Euclidean : AffineSpacing::ArcLength;
    if (a.spacing_tol > 0) opt.spacing_tol = a.spacing_tol;
    prov["spacing"] = a.affine_spacing;
    prov["spacing_tol"] = io::format_real(opt.spacing_tol);
    sig = sa_signature(m, scheme, opt);
  } else {
    EuclideanOptions opt;
    if (a.spacing_tol > 0) opt.spacing_tol = a.spacing_tol;
    prov["spacing_tol"] = io::format_real(opt.spacing_tol);
    prov["m1"] = std::to_string(a.m1);
    prov["m2"] = std::to_string(a.m2);
    sig = se_signature(m, scheme, NeighborhoodSpec{a.m1, a.m2}, opt);
  }
  if (sig.points.size() < m.size()) {
    std::cerr << "warning: no " << to_string(scheme) << " row for indices " << describe_missing_rows(m, sig)
              << " (stencil leaves the open mesh)\n";
  }
  if (sig.extrapolated) {
    std::cerr << "warning: " << to_string(scheme)
              << " arc lengths reach beyond the two-neighborhood used for the conic fit\n";
  }
  if (a.out.empty() || a.out == "-") {
    io::write_signature_csv(std::cout, sig, prov);
  } else {
    std::ofstream f(a.out);
    if (!f) throw Error(ErrorCode::ParseError, a.out + ": cannot write");
    io::write_signature_csv(f, sig, prov);
  }
  if (!a.plot.empty()) {
    std::ofstream f(a.plot);
    if (!f) throw Error(ErrorCode::ParseError, a.plot + ": cannot write");
    f << svg::signature_plot(sig, to_string(scheme) + " signature");
  }
  return kOk;
}

struct CongruentArgs {
  std::string first;
  std::string second;
  std::string group = "se";
  std::string mode = "index";
  std::string via = "oracle";
  std::string endpoint = "either";
  double tol = Tolerance<double>::congruence;
  double sig_tol = Tolerance<double>::signature;
  double angle_tol = Tolerance<double>::right_angle;
  double spacing_tol = Tolerance<double>::euclidean_spacing;
};

Group parse_group(const std::string& s) {
  if (s == "se") return Group::SE;
  if (s == "e") return Group::E;
  if (s == "sa") return Group::SA;
  return Group::Abar;
}

void print_verdict(const Verdict<double>& v) {
  const char* color = v.status == Status::Congruent ? "32" : (v.status == Status::NotCongruent ? "31" : "33");
  std::cout << "verdict: " << paint(std::string(to_string(v.status)), color) << "\n";
  if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
  if (v.oracle_disagreement) std::cout << "oracle_disagreement: true\n";
  if (v.witness) {
    const auto& L = v.witness->linear();
    const auto& t = v.witness->translation();
    std::cout << "linear: [[" << io::format_real(L(0, 0)) << ", " << io::format_real(L(0, 1)) << "], ["
              << io::format_real(L(1, 0)) << ", " << io::format_real(L(1, 1)) << "]]\n";
    std::cout << "translation: [" << io::format_real(t.x()) << ", " << io::format_real(t.y()) << "]\n";
    std::cout << "shift: " << v.shift << (v.reversed ? " (reversed)" : "") << "\n";
  }
  if (std::isfinite(v.residual)) std::cout << "residual: " << io::format_real(v.residual) << "\n";
}

int run_congruent(const CongruentArgs& a) {
  const Group group = parse_group(a.group);
  const bool euclid_via = a.via.rfind("thm4.", 0) == 0 || a.via == "thm3.3" || a.via == "host";
  const bool affine_via = a.via == "thm5.7" || a.via == "thm5.8" || a.via == "cor5.9";
  if ((euclid_via && group != Group::SE) || (affine_via && group != Group::SA)) {
    std::cerr << "error: --via " << a.via << " decides congruence under " << (euclid_via ? "se" : "sa")
              << ", not " << a.group << "\n";
    return kMismatch;
  }
  if (a.via != "oracle" && a.mode != "index") {
    std::cerr << "error: decision procedures use index-aligned correspondence only\n";
    return kMismatch;
  }
  const Mesh2d m1 = io::read_mesh(a.first);
  const Mesh2d m2 = io::read_mesh(a.second);
  DecideOptions opt;
  opt.congruence_tol = a.tol;
  opt.signature_tol = a.sig_tol;
  opt.angle_tol = a.angle_tol;
  opt.spacing_tol = a.spacing_tol;

  Verdict<double> v;
  if (a.via == "oracle") {
    const MatchMode mode = a.mode == "cyclic" ? MatchMode::Cyclic
                           : a.mode == "cyclic-reversal" ? MatchMode::CyclicWithReversal
                                                         : MatchMode::IndexAligned;
    v = align(m1, m2, group, mode, a.tol);
  } else if (a.via == "thm4.9") {
    v = decide_eq1(m1, m2, opt);
  } else if (a.via == "thm4.14") {
    v = decide_eq2_angle_type(m1, m2, AngleTypeVariant::AngleType, opt);
  } else if (a.via == "thm4.15") {
    v = decide_eq2_angle_type(m1, m2, AngleTypeVariant::Fine, opt);
  } else if (a.via == "thm4.18") {
    v = decide_eq2_signed(m1, m2, SignedVariant::SignedAngleType, opt);
  } else if (a.via == "thm4.20") {
    v = decide_eq2_signed(m1, m2, SignedVariant::SignedAngles, opt);
  } else if (a.via == "thm4.25") {
    v = decide_eq3(m1, m2, opt);
  } else if (a.via == "thm4.26") {
    const EndpointCondition ends = a.endpoint == "angle90"  ? EndpointCondition::Angle90
                                   : a.endpoint == "equal" ? EndpointCondition::EqualAngles
                                                           : EndpointCondition::Either;
    v = decide_eq4(m1, m2, ends, opt);
  } else if (a.via == "host") {
    v = decide_host(m1, m2, opt);
  } else if (a.via == "thm3.3") {
    v = decide_dist_angle(m1, m2, opt);
  } else {
    const AffineVariant variant = a.via == "thm5.7"   ? AffineVariant::NonzeroCurvature
                                  : a.via == "thm5.8" ? AffineVariant::ZeroCurvatureAreas
                                                      : AffineVariant::Fine;
    v = decide_affine(m1, m2, variant, opt);
  }
  print_verdict(v);
  switch (v.status) {
    case Status::Congruent: return kOk;
    case Status::NotCongruent: return kNotCongruent;
    case Status::HypothesesNotMet: return kHypotheses;
  }
  return kFailure;
}

int run_counterexample(const std::string& id_text, const std::string& outdir) {
  const auto id = counterexample_from_string(id_text);
  const auto ce = counterexample<double>(id);
  std::filesystem::create_directories(outdir);
  const std::string stem = std::string(to_string(id));
  const auto path = [&](const std::string& suffix) { return (std::filesystem::path(outdir) / (stem + suffix)).string(); };
  {
    std::ofstream fa(path("_a.csv"));
    std::ofstream fb(path("_b.csv"));
    if (!fa || !fb) throw Error(ErrorCode::ParseError, outdir + ": cannot write meshes");
    io::write_mesh_csv(fa, ce.a);
    io::write_mesh_csv(fb, ce.b);
  }
  nlohmann::json report;
  report["id"] = stem;
  report["description"] = ce.description;
  report["shared_invariant"] = ce.shared;
  report["index_base"] = 0;
  if (ce.shared == "curvature") {
    std::vector<double> ka, kb;
    for (auto i : interior_indices(ce.a)) {
      ka.push_back(euclidean_curvature(ce.a, std::ptrdiff_t(i)));
      kb.push_back(euclidean_curvature(ce.b, std::ptrdiff_t(i)));
    }
    report["curvature_a"] = ka;
    report["curvature_b"] = kb;
  } else {
    const Scheme s = ce.shared == "Eq2" ? Scheme::Eq2 : Scheme::Eq6;
    const auto sa = is_affine(s) ? sa_signature(ce.a, s) : se_signature(ce.a, s);
    const auto sb = is_affine(s) ? sa_signature(ce.b, s) : se_signature(ce.b, s);
    report["signature_distance"] = signature_distance(sa, sb);
  }
  std::cout << ce.description << "\n";
  for (const auto& e : ce.expected) {
    const auto v = align(ce.a, ce.b, e.group);
    nlohmann::json entry;
    entry["group"] = std::string(to_string(e.group));
    entry["expected"] = std::string(to_string(e.status));
    entry["oracle"] = std::string(to_string(v.status));
    report["verdicts"].push_back(entry);
    std::cout << to_string(e.group) << ": expected " << to_string(e.status) << ", oracle " << to_string(v.status)
              << "\n";
  }
  std::ofstream fr(path("_report.json"));
  fr << report.dump(2) << "\n";
  std::cout << "wrote " << path("_a.csv") << ", " << path("_b.csv") << ", " << path("_report.json") << "\n";
  return kOk;
}

int run_host(std::int64_t n, std::int64_t m, bool count, const std::vector<std::int64_t>& candidates) {
  std::cout << "indices are 0-based; index 0 is the first point\n";
  if (!candidates.empty()) {
    const auto ok = host_candidates(n, candidates);
    std::cout << "n = " << n << ", candidates:";
    for (auto c : candidates) std::cout << " " << c;
    std::cout << "\nvalid:";
    for (auto c : ok) std::cout << " " << c;
    std::cout << "\n";
    return kOk;
  }
  if (count) {
    const auto steps = valid_steps(n);
    std::cout << "phi(" << n << ") = " << euler_phi(n) << "\nsteps:";
    for (auto s : steps) std::cout << " " << s;
    std::cout << "\n";
    return kOk;
  }
  const auto t = traverse(n, m);
  std::cout << "order:";
  for (auto i : t.order) std::cout << " " << i;
  std::cout << "\n"
            << (t.complete ? "complete" : "incomplete") << " after " << t.steps() << " steps\n";
  return kOk;
}

int run_selfcheck_cmd(std::uint64_t seed, int trials) {
  int failed = 0;
  for (const auto& r : run_selfcheck(seed, trials)) {
    const bool ok = r.failures == 0;
    std::cout << paint(ok ? "PASS" : "FAIL", ok ? "32" : "31") << " " << r.name << " trials=" << r.trials
              << " failures=" << r.failures << "\n";
    if (!ok) std::cout << "  first failure: " << r.first_failure << "\n";
    failed += r.failures;
  }
  std::cout << failed << " failures\n";
  return failed == 0 ? kOk : kNotCongruent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint-invariant curvature signatures and congruence tests for planar point meshes"};
  app.require_subcommand(1);

  SignatureArgs sig;
  auto* cmd_sig = app.add_subcommand("signature", "compute a Euclidean (Eq1-Eq4) or equiaffine (Eq5-Eq8) signature");
  cmd_sig->add_option("input", sig.input, "mesh file (.csv or .json)")->required();
  cmd_sig->add_option("--group", sig.group, "se or sa")->check(CLI::IsMember({"se", "sa"}))->capture_default_str();
  cmd_sig->add_option("--scheme", sig.scheme, "1-4 for se, 5-8 for sa")->check(CLI::Range(1, 8))->capture_default_str();
  cmd_sig->add_option("--m1", sig.m1, "backward neighbor offset")->check(CLI::PositiveNumber)->capture_default_str();
  cmd_sig->add_option("--m2", sig.m2, "forward neighbor offset")->check(CLI::PositiveNumber)->capture_default_str();
  cmd_sig->add_option("--out", sig.out, "output CSV (default stdout)");
  cmd_sig->add_option("--plot", sig.plot, "also write an SVG plot of (kappa, kappa_s)");
  cmd_sig->add_flag("--closed", sig.closed, "treat the mesh as closed");
  cmd_sig->add_option("--spacing-tol", sig.spacing_tol,
                      "relative equal-spacing tolerance (default 1e-9 se, 1e-6 sa)");
  cmd_sig->add_option("--affine-spacing", sig.affine_spacing, "equal spacing for Eq5/Eq6: arc or euclidean")
      ->check(CLI::IsMember({"arc", "euclidean"}))
      ->capture_default_str();

  CongruentArgs cg;
  auto* cmd_cg = app.add_subcommand("congruent", "decide whether two meshes are congruent");
  cmd_cg->add_option("first", cg.first, "first mesh")->required();
  cmd_cg->add_option("second", cg.second, "second mesh")->required();
  cmd_cg->add_option("--group", cg.group, "se, e, sa or abar")
      ->check(CLI::IsMember({"se", "e", "sa", "abar"}))
      ->capture_default_str();
  cmd_cg->add_option("--mode", cg.mode, "index, cyclic or cyclic-reversal (oracle only)")
      ->check(CLI::IsMember({"index", "cyclic", "cyclic-reversal"}))
      ->capture_default_str();
  cmd_cg->add_option("--via", cg.via, "oracle or a decision procedure")
      ->check(CLI::IsMember({"oracle", "thm4.9", "thm4.14", "thm4.15", "thm4.18", "thm4.20", "thm4.25", "thm4.26",
                             "thm5.7", "thm5.8", "cor5.9", "thm3.3", "host"}))
      ->capture_default_str();
  cmd_cg->add_option("--endpoint", cg.endpoint, "open-mesh end condition for thm4.26: angle90, equal or either")
      ->check(CLI::IsMember({"angle90", "equal", "either"}))
      ->capture_default_str();
  cmd_cg->add_option("--tol", cg.tol, "alignment tolerance relative to the diameter")->capture_default_str();
  cmd_cg->add_option("--sig-tol", cg.sig_tol, "relative tolerance for equal signatures")->capture_default_str();
  cmd_cg->add_option("--angle-tol", cg.angle_tol, "right-angle band in radians")->capture_default_str();
  cmd_cg->add_option("--spacing-tol", cg.spacing_tol, "relative equal-spacing tolerance")->capture_default_str();

  std::string ce_id = "ex3";
  std::string ce_dir = ".";
  auto* cmd_ce = app.add_subcommand("counterexample", "write a non-congruent pair with equal invariants");
  cmd_ce->add_option("--id", ce_id, "ex1, ex2, ex3 or affine")
      ->check(CLI::IsMember({"ex1", "ex2", "ex3", "affine"}))
      ->capture_default_str();
  cmd_ce->add_option("--outdir", ce_dir, "output directory")->capture_default_str();

  std::int64_t host_n = 10, host_m = 1;
  bool host_count = false;
  std::vector<std::int64_t> host_cands;
  auto* cmd_host = app.add_subcommand("host", "step-m traversal of n points on a cycle");
  cmd_host->add_option("--n", host_n, "number of points")->required();
  auto* m_opt = cmd_host->add_option("--m", host_m, "step size");
  auto* count_opt = cmd_host->add_flag("--count", host_count, "list the valid steps and phi(n)");
  auto* cand_opt = cmd_host->add_option("--candidates", host_cands, "steps to test, e.g. 2,3,5")->delimiter(',');
  m_opt->excludes(count_opt)->excludes(cand_opt);
  count_opt->excludes(cand_opt);

  std::uint64_t seed = 0;
  int trials = 100;
  auto* cmd_self = app.add_subcommand("selfcheck", "randomized invariance audit");
  cmd_self->add_option("--seed", seed, "random seed")->capture_default_str();
  cmd_self->add_option("--trials", trials, "trials per suite")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*cmd_sig) return run_signature(sig);
    if (*cmd_cg) return run_congruent(cg);
    if (*cmd_ce) return run_counterexample(ce_id, ce_dir);
    if (*cmd_host) {
      if (!*m_opt && !host_count && host_cands.empty()) {
        std::cerr << "error: host needs --m, --count or --candidates\n";
        return kParse;
      }
      return run_host(host_n, host_m, host_count, host_cands);
    }
    if (*cmd_self) return run_selfcheck_cmd(seed, trials);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
