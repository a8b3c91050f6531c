#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "renlab/conjecture.hpp"
#include "renlab/masses.hpp"
#include "renlab/mc.hpp"
#include "renlab/poly.hpp"
#include "renlab/renewal.hpp"
#include "renlab/verify.hpp"

namespace renlab {

using Json = nlohmann::ordered_json;

/// Every JSON document carries this.
inline constexpr const char* kSchemaVersion = "1";

/// %.17g — doubles round-trip exactly and bytes are platform-stable here.
std::string format_double(double v);

Json masses_json(const MassVector& m);
MassVector masses_from_json(const Json& j);

Json point_json(const SimplexPoint& pt);

/// {"nvars": 2, "terms": [{"e": [2,0], "c": "1"}, ...]} in canonical order.
Json poly_json(const MultiPoly& poly);
MultiPoly poly_from_json(const Json& j);

/// Text rendering with custom variable names (to_text uses p1..pn).
std::string poly_text_named(const MultiPoly& poly, const std::vector<std::string>& names);

/// Sequence report: u, extremes, limit, envelopes (null when n_max < k).
Json compute_json(const RenewalSeq& seq);

/// CSV "n,u_n,b_n,c_n" (envelope cells empty below n = k).
std::string compute_csv(const RenewalSeq& seq);

/// Plain table for terminals.
std::string compute_text(const RenewalSeq& seq);

Json extremes_json(const MassVector& m, const ExtremesReport& ext);

Json window_json(const WindowCheck& chk);

Json class_verdict_json(const ClassVerdict& verdict);

Json k3_min_json(const K3MinCheck& check, const SamplePlan& plan);

Json k3_hat_json(const K3HatConstraintReport& report);

Json certificate_json(const PerturbationCertificate& cert);

Json demo_json(const NoLargestReport& report);

Json probe_json(const DominanceProbe& probe);

Json mc_json(const McCrossCheck& check);

/// CSV "n,u_exact,u_hat,stderr,z_score".
std::string mc_csv(const McCrossCheck& check);

Json verify_json(const VerifyReport& report);

}  // namespace renlab
