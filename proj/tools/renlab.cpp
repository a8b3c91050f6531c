// renlab — command-line surface for the exact renewal-sequence laboratory.
//
// Subcommands: compute, extremes, poly, classes, probe, demo, mc, verify-all.
// Exit codes: 0 success, 1 property/probe failure, 2 usage/validation error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "renlab/conjecture.hpp"
#include "renlab/errors.hpp"
#include "renlab/masses.hpp"
#include "renlab/mc.hpp"
#include "renlab/polyfam.hpp"
#include "renlab/renewal.hpp"
#include "renlab/report.hpp"
#include "renlab/util.hpp"
#include "renlab/verify.hpp"

namespace {

using renlab::Json;

struct Output {
  std::string format;  // json | csv | text
  std::string path;    // empty -> stdout
};

void emit(const std::string& text, const Output& out) {
  if (out.path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw renlab::Error("OutOfRange", "cannot open output file " + out.path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Reproducibility header: schema/kind first, then the run configuration,
/// then the report body.
Json with_config(const Json& body, const Json& config) {
  Json out;
  if (body.contains("schema_version")) out["schema_version"] = body["schema_version"];
  if (body.contains("kind")) out["kind"] = body["kind"];
  out["config"] = config;
  for (const auto& [key, value] : body.items())
    if (key != "schema_version" && key != "kind") out[key] = value;
  return out;
}

void reject_csv(const Output& out) {
  if (out.format == "csv")
    throw renlab::Error("OutOfRange", "csv output is not defined for this command");
}

std::string short_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string masses;
  int n = 20;
  Output out{"text", ""};
};

int run_compute(const ComputeArgs& a) {
  renlab::MassVector m = renlab::parse_masses(a.masses);
  renlab::RenewalSeq seq = renlab::compute_renewal(m, a.n);
  if (a.out.format == "json") {
    Json cfg;
    cfg["command"] = "compute";
    cfg["masses"] = a.masses;
    cfg["n"] = a.n;
    cfg["format"] = a.out.format;
    emit(dump(with_config(renlab::compute_json(seq), cfg)), a.out);
  } else if (a.out.format == "csv") {
    emit(renlab::compute_csv(seq), a.out);
  } else {
    emit(renlab::compute_text(seq), a.out);
  }
  return 0;
}

struct ExtremesArgs {
  std::string masses;
  int horizon = 0;  // 0 -> extremes only
  Output out{"text", ""};
};

int run_extremes(const ExtremesArgs& a) {
  reject_csv(a.out);
  renlab::MassVector m = renlab::parse_masses(a.masses);
  renlab::ExtremesReport ext = renlab::extremes(m);
  std::optional<renlab::WindowCheck> chk;
  if (a.horizon > 0) chk = renlab::verify_extremes_window(m, a.horizon);

  if (a.out.format == "json") {
    Json cfg;
    cfg["command"] = "extremes";
    cfg["masses"] = a.masses;
    cfg["horizon"] = a.horizon;
    cfg["format"] = a.out.format;
    Json body = renlab::extremes_json(m, ext);
    if (chk) body["window"] = renlab::window_json(*chk);
    emit(dump(with_config(body, cfg)), a.out);
    return 0;
  }

  std::ostringstream os;
  os << "step law: " << renlab::masses_text(m) << "\n";
  os << "window max M = " << renlab::rational_to_string(ext.M) << " at n=" << ext.argmax
     << "\nwindow min m = " << renlab::rational_to_string(ext.m) << " at n=" << ext.argmin
     << "\n";
  if (ext.degenerate) os << "(single-step law: both extremes degenerate to u_1)\n";
  if (chk) {
    os << "window law over horizon " << chk->horizon << ": "
       << (chk->ok() ? "holds" : "violated");
    if (chk->first_max_violation) os << " (max at n=" << *chk->first_max_violation << ")";
    if (chk->first_min_violation) os << " (min at n=" << *chk->first_min_violation << ")";
    if (!chk->min_checked) os << " (lower bound not applicable)";
    os << "\n";
  }
  emit(os.str(), a.out);
  return 0;
}

struct PolyArgs {
  std::string which;  // P | Q
  int l = 0;
  int n = 0;
  int k = 0;
  std::string form = "substituted";
  Output out{"text", ""};
};

int run_poly(const PolyArgs& a) {
  reject_csv(a.out);
  renlab::MultiPoly poly(1);
  if (a.which == "P") {
    if (a.l < 1) throw renlab::Error("OutOfRange", "poly P needs --l >= 1");
    if (a.k < 1) throw renlab::Error("OutOfRange", "poly P needs --k >= 1");
    renlab::PolyFamilyEntry entry = renlab::build_P(a.l, a.k);
    poly = a.form == "composition" ? entry.composition_form : entry.substituted;
  } else {
    if (a.n < 1) throw renlab::Error("OutOfRange", "poly Q needs --n >= 1");
    if (a.form == "composition")
      throw renlab::Error("OutOfRange", "the product bound has no composition form");
    poly = renlab::build_Q(a.n, a.k);
  }

  if (a.out.format == "json") {
    Json cfg;
    cfg["command"] = "poly";
    cfg["which"] = a.which;
    if (a.which == "P") cfg["l"] = a.l;
    if (a.which == "Q") cfg["n"] = a.n;
    cfg["k"] = a.k;
    cfg["form"] = a.form;
    cfg["format"] = a.out.format;
    Json body;
    body["schema_version"] = renlab::kSchemaVersion;
    body["kind"] = "poly";
    body["text"] = poly.to_text();
    body["poly"] = renlab::poly_json(poly);
    emit(dump(with_config(body, cfg)), a.out);
  } else {
    emit(poly.to_text() + "\n", a.out);
  }
  return 0;
}

renlab::SamplePlan make_plan(int grid_r, std::uint64_t random_count,
                             std::uint64_t random_seed) {
  if (random_count > 0) return renlab::SamplePlan::random(random_count, random_seed);
  return renlab::SamplePlan::grid(grid_r);
}

struct ClassesArgs {
  std::string poly_text;
  int k = 0;
  std::string klass = "a";
  int grid = 16;
  std::uint64_t random_count = 0;
  std::uint64_t random_seed = 0;
  Output out{"json", ""};
};

int run_classes(const ClassesArgs& a) {
  reject_csv(a.out);
  renlab::MultiPoly poly = renlab::MultiPoly::from_text(a.poly_text, a.k - 1);
  renlab::SamplePlan plan = make_plan(a.grid, a.random_count, a.random_seed);
  renlab::ClassVerdict verdict = a.klass == "a-hat"
                                     ? renlab::in_A_hat_class(poly, a.k, plan)
                                     : renlab::in_A_class(poly, a.k, plan);
  if (a.out.format == "json") {
    Json cfg;
    cfg["command"] = "classes";
    cfg["poly"] = a.poly_text;
    cfg["k"] = a.k;
    cfg["class"] = a.klass;
    cfg["plan"] = plan.describe();
    cfg["format"] = a.out.format;
    emit(dump(with_config(renlab::class_verdict_json(verdict), cfg)), a.out);
  } else {
    std::ostringstream os;
    if (verdict.certified_out()) {
      os << "certified out of the " << (a.klass == "a-hat" ? "refined" : "windowed")
         << " envelope class";
      if (verdict.reason == renlab::ClassVerdict::Reason::Value && verdict.witness)
        os << " (exceeds the windowed minimum at "
           << renlab::simplex_point_text(*verdict.witness) << ")";
      if (verdict.reason == renlab::ClassVerdict::Reason::Degree)
        os << " (degree " << verdict.degree << " too high)";
      if (verdict.reason == renlab::ClassVerdict::Reason::HatSliceDegree)
        os << " (slice " << verdict.slice_j << " has degree " << verdict.degree << ")";
      os << "\n";
    } else {
      os << "not falsified over " << verdict.points_checked << " sampled points\n";
    }
    emit(os.str(), a.out);
  }
  return verdict.certified_out() ? 1 : 0;
}

struct ProbeArgs {
  int k = 3;
  std::string klass = "a-hat";
  int grid = 32;
  double tol = 1e-6;
  Output out{"json", ""};
};

int run_probe(const ProbeArgs& a) {
  reject_csv(a.out);
  renlab::ClassKind kind =
      a.klass == "a" ? renlab::ClassKind::Window : renlab::ClassKind::Hat;
  renlab::DominanceProbe probe = renlab::dominance_search(a.k, kind, a.grid, a.tol);

  std::string repro = "renlab probe --k " + std::to_string(a.k) + " --class " + a.klass +
                      " --grid " + std::to_string(a.grid) + " --tol " +
                      short_double(a.tol) + " --format json";
  if (a.out.format == "json") {
    Json cfg;
    cfg["command"] = "probe";
    cfg["k"] = a.k;
    cfg["class"] = a.klass;
    cfg["grid"] = a.grid;
    cfg["tol"] = short_double(a.tol);
    cfg["format"] = a.out.format;
    Json body = renlab::probe_json(probe);
    body["repro"] = repro;
    emit(dump(with_config(body, cfg)), a.out);
  } else {
    std::ostringstream os;
    os << "dominance probe k=" << a.k << " class=" << a.klass << " grid r=" << a.grid
       << "\n";
    os << "LP objective (total on-grid improvement): " << renlab::format_double(probe.objective)
       << " after " << probe.lp_iterations << " pivots\n";
    os << "candidate: " << probe.candidate.to_text() << "\n";
    os << "product bound: " << probe.q_poly.to_text() << "\n";
    os << "exact recheck (r=" << probe.recheck.grid_r
       << "): in class=" << (probe.recheck.in_class ? "yes" : "no")
       << ", dominates=" << (probe.recheck.dominates ? "yes" : "no")
       << ", distinct=" << (probe.recheck.distinct ? "yes" : "no") << "\n";
    os << (probe.anomalous ? "ANOMALY: improvement survives the exact recheck\n"
                           : "no improvement survives: consistent with maximality\n");
    emit(os.str(), a.out);
  }
  return probe.anomalous ? 1 : 0;
}

struct DemoArgs {
  std::string mode;
  int k = 3;
  int scan = 64;
  std::string points;  // "1/4,1/2;3/4,0"
  Output out{"json", ""};
};

int run_demo(const DemoArgs& a) {
  reject_csv(a.out);
  std::vector<renlab::SimplexPoint> pts;
  if (!a.points.empty()) {
    std::string s = a.points;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t semi = s.find(';', pos);
      std::string chunk =
          semi == std::string::npos ? s.substr(pos) : s.substr(pos, semi - pos);
      std::vector<renlab::Rational> coords;
      std::size_t cpos = 0;
      while (cpos <= chunk.size()) {
        std::size_t comma = chunk.find(',', cpos);
        std::string c = comma == std::string::npos ? chunk.substr(cpos)
                                                   : chunk.substr(cpos, comma - cpos);
        coords.push_back(renlab::rational_from_string(c));
        if (comma == std::string::npos) break;
        cpos = comma + 1;
      }
      pts.push_back(renlab::make_simplex_point(a.k, coords));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
  }

  renlab::NoLargestReport report =
      renlab::no_largest_demo(a.k, pts, renlab::SamplePlan::grid(a.scan));

  std::string repro = "renlab demo no-largest --k " + std::to_string(a.k) + " --scan " +
                      std::to_string(a.scan);
  if (!a.points.empty()) repro += " --points \"" + a.points + "\"";
  repro += " --format json";

  if (a.out.format == "json") {
    Json cfg;
    cfg["command"] = "demo";
    cfg["mode"] = a.mode;
    cfg["k"] = a.k;
    cfg["scan"] = a.scan;
    if (!a.points.empty()) cfg["points"] = a.points;
    cfg["format"] = a.out.format;
    Json body = renlab::demo_json(report);
    body["note"] =
        "a pointwise-largest lower envelope would have to equal the windowed "
        "minimum at every certified base point, hence everywhere: impossible "
        "for a single polynomial";
    body["repro"] = repro;
    emit(dump(with_config(body, cfg)), a.out);
  } else {
    std::ostringstream os;
    os << "no-largest demonstration, k=" << a.k << ", scan grid r=" << a.scan << "\n";
    os << "regions certified:";
    for (int r : report.regions) os << " " << r;
    os << "\n";
    for (const renlab::PerturbationCertificate& c : report.certificates)
      os << "  region " << c.l << " base " << renlab::simplex_point_text(c.base)
         << ": a = " << renlab::rational_to_string(c.a)
         << ", margin = " << renlab::rational_to_string(c.margin) << " over "
         << c.points_checked << " points\n";
    os << "any largest envelope would be pinned to the windowed minimum at every "
          "base point above — no single polynomial can do that\n";
    emit(os.str(), a.out);
  }
  return 0;
}

struct McArgs {
  std::string masses;
  int n = 20;
  std::uint64_t walks = 100000;
  std::uint64_t seed = 1;
  double z = 5.0;
  int jobs = 0;
  Output out{"json", ""};
};

int run_mc(const McArgs& a) {
  renlab::MassVector m = renlab::parse_masses(a.masses);
  renlab::McCrossCheck check = renlab::cross_check(m, a.n, a.walks, a.seed, a.z, a.jobs);

  std::string repro = "renlab mc --masses " + a.masses + " --n " + std::to_string(a.n) +
                      " --walks " + std::to_string(a.walks) + " --seed " +
                      std::to_string(a.seed) + " --z " + short_double(a.z) +
                      " --format json";
  if (a.out.format == "json") {
    Json cfg;
    cfg["command"] = "mc";
    cfg["masses"] = a.masses;
    cfg["n"] = a.n;
    cfg["walks"] = a.walks;
    cfg["seed"] = a.seed;
    cfg["z"] = a.z;
    cfg["format"] = a.out.format;
    Json body = renlab::mc_json(check);
    body["repro"] = repro;
    emit(dump(with_config(body, cfg)), a.out);
  } else if (a.out.format == "csv") {
    emit(renlab::mc_csv(check), a.out);
  } else {
    std::ostringstream os;
    os << "simulated " << a.walks << " walks (seed " << a.seed << ") for "
       << renlab::masses_text(m) << ", horizon " << a.n << "\n";
    os << "worst |z| = " << renlab::format_double(check.worst_z) << " at n="
       << check.worst_n << " (threshold " << short_double(a.z) << ")\n";
    os << (check.pass ? "PASS: estimator agrees with the exact sequence\n"
                      : "FAIL: estimator disagrees with the exact sequence\n");
    emit(os.str(), a.out);
  }
  return check.pass ? 0 : 1;
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  std::string budget = "default";
  int jobs = 0;
  Output out{"json", ""};
};

int run_verify_all(const VerifyArgs& a) {
  reject_csv(a.out);
  renlab::VerifyBudget budget = renlab::VerifyBudget::by_name(a.budget);
  auto progress = [](const renlab::ClaimResult& r) {
    std::fprintf(stderr, "[%s] %s — %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                 r.detail.c_str());
  };
  renlab::VerifyReport report = renlab::run_verify(a.seed, budget, a.jobs, progress);

  if (a.out.format == "json") {
    Json cfg;
    cfg["command"] = "verify-all";
    cfg["seed"] = a.seed;
    cfg["budget"] = a.budget;
    cfg["format"] = a.out.format;
    emit(dump(with_config(renlab::verify_json(report), cfg)), a.out);
  } else {
    std::ostringstream os;
    for (const renlab::ClaimResult& r : report.claims)
      os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << " — " << r.detail
         << "\n";
    os << (report.all_pass ? "all claims pass\n" : "SOME CLAIMS FAILED\n");
    emit(os.str(), a.out);
  }
  return report.all_pass ? 0 : 1;
}

void add_output(CLI::App* cmd, Output& out, const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic laboratory for discrete renewal sequences"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand(
      "compute", "renewal masses, envelopes and the long-run limit for a step law");
  compute->add_option("--masses", compute_args.masses,
                      "comma-separated rational step masses, e.g. 1/2,1/4,1/4")
      ->required();
  compute->add_option("--n", compute_args.n, "horizon n_max")->capture_default_str();
  add_output(compute, compute_args.out, "text");

  ExtremesArgs extremes_args;
  CLI::App* extremes = app.add_subcommand(
      "extremes", "window max/min of the renewal masses, with an optional window-law check");
  extremes->add_option("--masses", extremes_args.masses, "step masses")->required();
  extremes->add_option("--horizon", extremes_args.horizon,
                       "also verify the window law up to this horizon");
  add_output(extremes, extremes_args.out, "text");

  PolyArgs poly_args;
  CLI::App* poly = app.add_subcommand(
      "poly", "mass polynomials P and the product lower bound Q, in canonical text");
  poly->add_option("which", poly_args.which, "P (mass polynomial) or Q (product bound)")
      ->required()
      ->check(CLI::IsMember({"P", "Q"}));
  poly->add_option("--l", poly_args.l, "mass index for P");
  poly->add_option("--n", poly_args.n, "factor count for Q");
  poly->add_option("--k", poly_args.k, "support size")->required();
  poly->add_option("--form", poly_args.form, "P only: substituted or composition")
      ->check(CLI::IsMember({"substituted", "composition"}))
      ->capture_default_str();
  add_output(poly, poly_args.out, "text");

  ClassesArgs classes_args;
  CLI::App* classes = app.add_subcommand(
      "classes", "test a polynomial against the lower-envelope classes");
  classes->add_option("--poly", classes_args.poly_text, "polynomial in p1..p(k-1)")
      ->required();
  classes->add_option("--k", classes_args.k, "support size")->required();
  classes->add_option("--class", classes_args.klass, "a (windowed) or a-hat (refined)")
      ->check(CLI::IsMember({"a", "a-hat"}))
      ->capture_default_str();
  classes->add_option("--grid", classes_args.grid, "grid resolution for the value scan")
      ->capture_default_str();
  classes->add_option("--random", classes_args.random_count,
                      "use this many random points instead of a grid");
  classes->add_option("--seed", classes_args.random_seed, "seed for --random");
  add_output(classes, classes_args.out, "json");

  ProbeArgs probe_args;
  CLI::App* probe = app.add_subcommand(
      "probe", "LP search for an in-class polynomial dominating the product bound");
  probe->add_option("--k", probe_args.k, "support size")->capture_default_str();
  probe->add_option("--class", probe_args.klass, "a or a-hat")
      ->check(CLI::IsMember({"a", "a-hat"}))
      ->capture_default_str();
  probe->add_option("--grid", probe_args.grid, "constraint grid resolution")
      ->capture_default_str();
  probe->add_option("--tol", probe_args.tol, "anomaly threshold on the LP objective")
      ->capture_default_str();
  add_output(probe, probe_args.out, "json");

  DemoArgs demo_args;
  CLI::App* demo = app.add_subcommand(
      "demo", "constructive demonstrations around the envelope classes");
  demo->add_option("mode", demo_args.mode, "demonstration to run")
      ->required()
      ->check(CLI::IsMember({"no-largest"}));
  demo->add_option("--k", demo_args.k, "support size")->capture_default_str();
  demo->add_option("--scan", demo_args.scan, "certificate scan grid resolution")
      ->capture_default_str();
  demo->add_option("--points", demo_args.points,
                   "base points, semicolon-separated (default: canonical/representatives)");
  add_output(demo, demo_args.out, "json");

  McArgs mc_args;
  CLI::App* mc = app.add_subcommand(
      "mc", "Monte Carlo estimate of the renewal masses, cross-checked exactly");
  mc->add_option("--masses", mc_args.masses, "step masses")->required();
  mc->add_option("--n", mc_args.n, "horizon")->capture_default_str();
  mc->add_option("--walks", mc_args.walks, "number of simulated walks")
      ->capture_default_str();
  mc->add_option("--seed", mc_args.seed, "RNG seed")->capture_default_str();
  mc->add_option("--z", mc_args.z, "z-score gate")->capture_default_str();
  mc->add_option("--jobs", mc_args.jobs,
                 "worker threads (0 = RENEWAL_LAB_JOBS or hardware)");
  add_output(mc, mc_args.out, "json");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify-all", "run the whole claim suite (progress on stderr, report on stdout)");
  verify->add_option("--seed", verify_args.seed, "suite seed")->capture_default_str();
  verify->add_option("--budget", verify_args.budget, "work profile")
      ->check(CLI::IsMember({"default", "tiny"}))
      ->capture_default_str();
  verify->add_option("--jobs", verify_args.jobs,
                     "worker threads (0 = RENEWAL_LAB_JOBS or hardware)");
  add_output(verify, verify_args.out, "json");

  int rc = 0;
  compute->callback([&] { rc = run_compute(compute_args); });
  extremes->callback([&] { rc = run_extremes(extremes_args); });
  poly->callback([&] { rc = run_poly(poly_args); });
  classes->callback([&] { rc = run_classes(classes_args); });
  probe->callback([&] { rc = run_probe(probe_args); });
  demo->callback([&] { rc = run_demo(demo_args); });
  mc->callback([&] { rc = run_mc(mc_args); });
  verify->callback([&] { rc = run_verify_all(verify_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  } catch (const renlab::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
