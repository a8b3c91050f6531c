#include "renlab/report.hpp"

#include <cstdio>
#include <sstream>

#include "renlab/errors.hpp"

namespace renlab {

namespace {

Json rat(const Rational& q) { return rational_to_string(q); }

Json rat_array(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const Rational& q : v) arr.push_back(rat(q));
  return arr;
}

Json plan_json(const SamplePlan& plan) {
  Json j;
  if (plan.mode == SampleMode::Grid) {
    j["mode"] = "grid";
    j["resolution"] = plan.resolution;
  } else {
    j["mode"] = "random";
    j["count"] = plan.count;
    j["seed"] = plan.seed;
  }
  return j;
}

const char* verdict_status_name(ClassVerdict::Status s) {
  return s == ClassVerdict::Status::NotFalsified ? "not-falsified" : "certified-out";
}

const char* verdict_reason_name(ClassVerdict::Reason r) {
  switch (r) {
    case ClassVerdict::Reason::Degree: return "degree";
    case ClassVerdict::Reason::Value: return "value";
    case ClassVerdict::Reason::HatSliceDegree: return "hat-slice-degree";
    case ClassVerdict::Reason::None: break;
  }
  return "none";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json masses_json(const MassVector& m) {
  Json j;
  j["k"] = m.k;
  Json p = Json::array();
  for (const Rational& q : m.p) p.push_back(rat(q));
  j["p"] = p;
  return j;
}

MassVector masses_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j["p"].is_array())
    throw Error("BadPoly", "mass JSON must be an object with a \"p\" array");
  std::vector<Rational> p;
  for (const Json& c : j["p"]) p.push_back(rational_from_string(c.get<std::string>()));
  MassVector m = make_masses(p);
  if (j.contains("k") && j["k"].get<int>() != m.k)
    throw Error("ArityMismatch", "mass JSON \"k\" disagrees with the mass list");
  return m;
}

Json point_json(const SimplexPoint& pt) {
  Json j;
  j["k"] = pt.k;
  j["q"] = rat_array(pt.q);
  return j;
}

Json poly_json(const MultiPoly& poly) {
  Json j;
  j["nvars"] = poly.nvars();
  Json terms = Json::array();
  for (const auto& [e, c] : poly.terms()) {
    Json t;
    Json exps = Json::array();
    for (int i = 0; i < poly.nvars(); ++i) exps.push_back(e[static_cast<std::size_t>(i)]);
    t["e"] = exps;
    t["c"] = rat(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    throw Error("BadPoly", "polynomial JSON must carry \"nvars\" and \"terms\"");
  int nvars = j["nvars"].get<int>();
  MultiPoly p(nvars);
  for (const Json& t : j["terms"]) {
    const Json& exps = t["e"];
    if (!exps.is_array() || static_cast<int>(exps.size()) != nvars)
      throw Error("ArityMismatch", "term exponent list length must equal nvars");
    Exponents e{};
    for (int i = 0; i < nvars; ++i) {
      long x = exps[static_cast<std::size_t>(i)].get<long>();
      if (x < 0 || x > 0xffffL)
        throw Error("BadPoly", "exponent out of range in polynomial JSON");
      e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(x);
    }
    p.add_term(e, rational_from_string(t["c"].get<std::string>()));
  }
  return p;
}

std::string poly_text_named(const MultiPoly& poly, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) < poly.nvars())
    throw Error("ArityMismatch", "need one name per polynomial variable");
  if (poly.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c);
    for (int i = 0; i < poly.nvars(); ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      os << " * " << names[static_cast<std::size_t>(i)];
      if (e[static_cast<std::size_t>(i)] > 1) os << "^" << e[static_cast<std::size_t>(i)];
    }
  }
  return os.str();
}

Json compute_json(const RenewalSeq& seq) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "compute";
  j["masses"] = masses_json(seq.masses);
  j["n_max"] = seq.n_max;
  j["u"] = rat_array(seq.u);

  if (seq.n_max >= seq.masses.k) {
    ExtremesReport ext = extremes_of(seq);
    j["M"] = rat(ext.M);
    j["argmax"] = ext.argmax;
    j["m"] = rat(ext.m);
    j["argmin"] = ext.argmin;
  } else {
    j["M"] = nullptr;
    j["argmax"] = nullptr;
    j["m"] = nullptr;
    j["argmin"] = nullptr;
  }

  if (period(seq.masses) == 1)
    j["limit"] = rat(blackwell_limit(seq.masses));
  else
    j["limit"] = nullptr;

  if (seq.n_max >= seq.masses.k) {
    Envelopes env = envelopes(seq);
    Json e;
    e["start"] = env.start;
    e["b"] = rat_array(env.b);
    e["c"] = rat_array(env.c);
    j["envelopes"] = e;
  } else {
    j["envelopes"] = nullptr;
  }
  return j;
}

std::string compute_csv(const RenewalSeq& seq) {
  std::ostringstream os;
  os << "n,u_n,b_n,c_n\n";
  std::vector<std::string> b(seq.u.size()), c(seq.u.size());
  if (seq.n_max >= seq.masses.k) {
    Envelopes env = envelopes(seq);
    for (std::size_t i = 0; i < env.b.size(); ++i) {
      b[static_cast<std::size_t>(env.start) + i] = rational_to_string(env.b[i]);
      c[static_cast<std::size_t>(env.start) + i] = rational_to_string(env.c[i]);
    }
  }
  for (std::size_t n = 0; n < seq.u.size(); ++n)
    os << n << "," << rational_to_string(seq.u[n]) << "," << b[n] << "," << c[n] << "\n";
  return os.str();
}

std::string compute_text(const RenewalSeq& seq) {
  std::ostringstream os;
  os << "step law: " << masses_text(seq.masses) << "\n";
  if (period(seq.masses) == 1) {
    Rational lim = blackwell_limit(seq.masses);
    os << "limit 1/mean = " << rational_to_string(lim) << " ~ "
       << decimal_string(lim, 9) << "\n";
  } else {
    os << "periodic law (period " << period(seq.masses) << "), no limit\n";
  }
  std::vector<std::string> b(seq.u.size()), c(seq.u.size());
  if (seq.n_max >= seq.masses.k) {
    ExtremesReport ext = extremes_of(seq);
    os << "window max M = " << rational_to_string(ext.M) << " at n=" << ext.argmax
       << ", window min m = " << rational_to_string(ext.m) << " at n=" << ext.argmin
       << "\n";
    Envelopes env = envelopes(seq);
    for (std::size_t i = 0; i < env.b.size(); ++i) {
      b[static_cast<std::size_t>(env.start) + i] = rational_to_string(env.b[i]);
      c[static_cast<std::size_t>(env.start) + i] = rational_to_string(env.c[i]);
    }
  }
  os << "\n  n  u_n (exact)          u_n (decimal)   b_n            c_n\n";
  for (std::size_t n = 0; n < seq.u.size(); ++n) {
    std::string ue = rational_to_string(seq.u[n]);
    std::string ud = decimal_string(seq.u[n], 9);
    os << "  " << n;
    os << std::string(n < 10 ? 2 : (n < 100 ? 1 : 0), ' ');
    os << " " << ue << std::string(ue.size() < 20 ? 20 - ue.size() : 1, ' ');
    os << " " << ud << std::string(ud.size() < 15 ? 15 - ud.size() : 1, ' ');
    os << " " << (b[n].empty() ? "-" : b[n]);
    os << std::string(b[n].size() < 14 ? 14 - b[n].size() : 1, ' ');
    os << " " << (c[n].empty() ? "-" : c[n]) << "\n";
  }
  return os.str();
}

Json extremes_json(const MassVector& m, const ExtremesReport& ext) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "extremes";
  j["masses"] = masses_json(m);
  j["M"] = rat(ext.M);
  j["argmax"] = ext.argmax;
  j["m"] = rat(ext.m);
  j["argmin"] = ext.argmin;
  j["degenerate"] = ext.degenerate;
  return j;
}

Json window_json(const WindowCheck& chk) {
  Json j;
  j["horizon"] = chk.horizon;
  j["aperiodic"] = chk.aperiodic;
  j["max_ok"] = chk.max_ok;
  j["first_max_violation"] =
      chk.first_max_violation ? Json(*chk.first_max_violation) : Json(nullptr);
  j["min_checked"] = chk.min_checked;
  j["min_ok"] = chk.min_ok;
  j["first_min_violation"] =
      chk.first_min_violation ? Json(*chk.first_min_violation) : Json(nullptr);
  j["ok"] = chk.ok();
  return j;
}

Json class_verdict_json(const ClassVerdict& verdict) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "class-verdict";
  j["status"] = verdict_status_name(verdict.status);
  j["reason"] = verdict_reason_name(verdict.reason);
  if (verdict.reason == ClassVerdict::Reason::Value) {
    j["witness"] = verdict.witness ? point_json(*verdict.witness) : Json(nullptr);
    j["lhs"] = rat(verdict.lhs);
    j["rhs"] = rat(verdict.rhs);
  }
  if (verdict.reason == ClassVerdict::Reason::Degree ||
      verdict.reason == ClassVerdict::Reason::HatSliceDegree)
    j["degree"] = verdict.degree;
  if (verdict.reason == ClassVerdict::Reason::HatSliceDegree)
    j["slice_j"] = verdict.slice_j;
  j["points_checked"] = verdict.points_checked;
  j["certified_out"] = verdict.certified_out();
  return j;
}

Json k3_min_json(const K3MinCheck& check, const SamplePlan& plan) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "k3-minimum";
  j["plan"] = plan_json(plan);
  j["ok"] = check.ok;
  j["points_checked"] = check.checked;
  if (check.first_mismatch) {
    j["mismatch_point"] = point_json(*check.first_mismatch);
    j["recurrence_value"] = rat(check.recurrence_value);
    j["formula_value"] = rat(check.formula_value);
  }
  return j;
}

Json k3_hat_json(const K3HatConstraintReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "k3-hat-constraint";
  j["p1sq_coefficient"] = poly_text_named(report.p1sq_coefficient, report.coeff_names);
  j["constraint"] = "b = a + c";
  j["constraint_matches"] = report.constraint_matches;
  j["det_lhs"] = poly_text_named(report.det_lhs, report.det_names);
  j["det_rhs"] = poly_text_named(report.det_rhs, report.det_names);
  j["identity_holds"] = report.identity_holds;
  j["ok"] = report.ok();
  return j;
}

Json certificate_json(const PerturbationCertificate& cert) {
  Json j;
  j["k"] = cert.k;
  j["region"] = cert.l;
  j["base"] = point_json(cert.base);
  j["a"] = rat(cert.a);
  j["margin"] = rat(cert.margin);
  j["margin_decimal"] = decimal_string(cert.margin, 12);
  j["scan"] = plan_json(cert.scan);
  j["points_checked"] = cert.points_checked;
  j["perturbed"] = cert.perturbed.to_text();
  return j;
}

Json demo_json(const NoLargestReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "no-largest-demo";
  j["k"] = report.k;
  j["scan"] = plan_json(report.scan);
  j["regions"] = report.regions;
  Json certs = Json::array();
  for (const PerturbationCertificate& c : report.certificates)
    certs.push_back(certificate_json(c));
  j["certificates"] = certs;
  return j;
}

Json probe_json(const DominanceProbe& probe) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "dominance-probe";
  j["k"] = probe.k;
  j["class"] = class_kind_name(probe.class_kind);
  j["plan"] = plan_json(SamplePlan::grid(probe.grid_r));
  j["basis_size"] = probe.basis_size;
  j["null_dim"] = probe.null_dim;
  j["objective"] = format_double(probe.objective);
  j["lp_iterations"] = probe.lp_iterations;
  j["q_poly"] = probe.q_poly.to_text();
  j["candidate"] = probe.candidate.to_text();
  Json r;
  r["grid_r"] = probe.recheck.grid_r;
  r["in_class"] = probe.recheck.in_class;
  r["dominates"] = probe.recheck.dominates;
  r["distinct"] = probe.recheck.distinct;
  r["witness"] = probe.recheck.witness ? point_json(*probe.recheck.witness) : Json(nullptr);
  j["recheck"] = r;
  j["tol"] = format_double(probe.tol);
  j["anomalous"] = probe.anomalous;
  return j;
}

Json mc_json(const McCrossCheck& check) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "mc";
  j["masses"] = masses_json(check.estimate.masses);
  j["n_max"] = check.estimate.n_max;
  j["n_walks"] = check.estimate.n_walks;
  j["seed"] = check.estimate.seed;
  j["z_threshold"] = check.z_threshold;
  Json rows = Json::array();
  for (const McRow& r : check.rows) {
    Json row;
    row["n"] = r.n;
    row["u_exact"] = rat(r.u_exact);
    row["u_hat"] = r.u_hat;
    row["stderr"] = r.se;
    row["z_score"] = r.z;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["worst_z"] = check.worst_z;
  j["worst_n"] = check.worst_n;
  j["pass"] = check.pass;
  return j;
}

std::string mc_csv(const McCrossCheck& check) {
  std::ostringstream os;
  os << "n,u_exact,u_hat,stderr,z_score\n";
  for (const McRow& r : check.rows)
    os << r.n << "," << rational_to_string(r.u_exact) << "," << format_double(r.u_hat)
       << "," << format_double(r.se) << "," << format_double(r.z) << "\n";
  return os.str();
}

Json verify_json(const VerifyReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "verify";
  j["seed"] = report.seed;
  j["budget"] = report.budget;
  j["jobs"] = report.jobs;
  Json claims = Json::array();
  for (const ClaimResult& c : report.claims) {
    Json cj;
    cj["name"] = c.name;
    cj["title"] = c.title;
    cj["pass"] = c.pass;
    cj["checked"] = c.checked;
    cj["detail"] = c.detail;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  j["all_pass"] = report.all_pass;
  return j;
}

}  // namespace renlab
