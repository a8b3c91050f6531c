#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renlab/report.hpp"
#include "testutil.hpp"

using namespace renlab;
using testor::error_code_of;

TEST_CASE("double formatting round-trips and is stable") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  CHECK(std::stod(format_double(0.1)) == 0.1);
  CHECK(std::stod(format_double(6.62607015e-34)) == 6.62607015e-34);
}

TEST_CASE("mass vectors round-trip through JSON") {
  MassVector m = parse_masses("1/2,1/4,1/4");
  Json j = masses_json(m);
  CHECK(j["k"] == 3);
  CHECK(j["p"] == Json::array({"1/2", "1/4", "1/4"}));
  MassVector back = masses_from_json(j);
  CHECK(back.k == m.k);
  CHECK(back.p == m.p);

  SUBCASE("malformed documents are rejected") {
    Json bad = {{"k", 3}, {"p", Json::array({"1/2", "1/2"})}};
    CHECK(error_code_of([&] { masses_from_json(bad); }) == "ArityMismatch");
  }
}

TEST_CASE("polynomials round-trip through JSON") {
  MultiPoly f = MultiPoly::from_text("1 * p1^2 + 1 * p2", 2);
  Json j = poly_json(f);
  CHECK(j["nvars"] == 2);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["e"] == Json::array({2, 0}));
  CHECK(j["terms"][0]["c"] == "1");
  MultiPoly back = poly_from_json(j);
  CHECK(back == f);

  SUBCASE("named rendering") {
    CHECK(poly_text_named(f, {"a", "b"}) == "1 * a^2 + 1 * b");
    CHECK(error_code_of([&] { poly_text_named(f, {"a"}); }) == "ArityMismatch");
  }
}

TEST_CASE("sequence reports") {
  RenewalSeq seq = compute_renewal(parse_masses("1/2,1/2"), 6);

  SUBCASE("JSON carries schema version, exact values and the limit") {
    Json j = compute_json(seq);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["kind"] == "compute");
    CHECK(j["u"][0] == "1");
    CHECK(j["u"][2] == "3/4");
    CHECK(j["limit"] == "2/3");
    CHECK(j["M"] == "3/4");
    CHECK(j["argmax"] == 2);
    CHECK(j["envelopes"]["start"] == 2);
  }
  SUBCASE("periodic laws have a null limit") {
    Json j = compute_json(compute_renewal(parse_masses("0,1"), 4));
    CHECK(j["limit"].is_null());
  }
  SUBCASE("CSV header and envelope blanks") {
    std::string csv = compute_csv(seq);
    CHECK(csv.rfind("n,u_n,b_n,c_n\n", 0) == 0);
    CHECK(csv.find("0,1,,\n") != std::string::npos);  // below start: blank
    CHECK(csv.find("2,3/4,1,1/2\n") != std::string::npos);
  }
  SUBCASE("text table mentions the limit") {
    std::string text = compute_text(seq);
    CHECK(text.find("2/3") != std::string::npos);
  }
}

TEST_CASE("monte carlo reports") {
  McCrossCheck chk = cross_check(parse_masses("1/2,1/2"), 5, 4000, 9);
  Json j = mc_json(chk);
  CHECK(j["kind"] == "mc");
  CHECK(j["pass"] == chk.pass);
  REQUIRE(j["rows"].size() == 5);
  CHECK(j["rows"][0]["u_exact"] == "1/2");

  std::string csv = mc_csv(chk);
  CHECK(csv.rfind("n,u_exact,u_hat,stderr,z_score\n", 0) == 0);

  SUBCASE("serialization is deterministic byte-for-byte") {
    McCrossCheck again = cross_check(parse_masses("1/2,1/2"), 5, 4000, 9);
    CHECK(mc_json(again).dump(2) == j.dump(2));
  }
}

TEST_CASE("probe and demo reports") {
  NoLargestReport rep = no_largest_demo(3, {}, SamplePlan::grid(16));
  Json dj = demo_json(rep);
  CHECK(dj["kind"] == "no-largest-demo");
  CHECK(dj["regions"] == Json::array({1, 2}));
  REQUIRE(dj["certificates"].size() == 2);
  CHECK(dj["certificates"][0]["margin"] == "0");

  DominanceProbe probe = dominance_search(3, ClassKind::Hat, 8);
  Json pj = probe_json(probe);
  CHECK(pj["kind"] == "dominance-probe");
  CHECK(pj["class"] == "a-hat");
  CHECK(pj["objective"].is_string());  // decimal string, not a JSON number
  CHECK(pj["anomalous"] == false);
}

TEST_CASE("verdict serialization distinguishes reasons") {
  ClassVerdict v = in_A_class(MultiPoly::constant(2, 2), 3, SamplePlan::grid(4));
  Json j = class_verdict_json(v);
  CHECK(j["status"] == "certified-out");
  CHECK(j["reason"] == "value");
  CHECK(j.contains("witness"));

  ClassVerdict ok = in_A_class(build_Q(3, 3), 3, SamplePlan::grid(4));
  Json jo = class_verdict_json(ok);
  CHECK(jo["status"] == "not-falsified");
  CHECK(jo["reason"] == "none");
}
