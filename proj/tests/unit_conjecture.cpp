#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renlab/conjecture.hpp"
#include "testutil.hpp"

using namespace renlab;
using testor::error_code_of;

namespace {
SimplexPoint pt3(long n1, long d1, long n2, long d2) {
  return make_simplex_point(
      3, {make_rational(n1, d1), make_rational(n2, d2)});
}
}  // namespace

TEST_CASE("region classification at k = 3") {
  RegionResult r1 = region_classify(3, pt3(1, 4, 1, 2));
  CHECK(r1.l == 1);  // p1 = 1/4 < p1^2 + p2 = 9/16
  CHECK_FALSE(r1.boundary);
  REQUIRE(r1.values.size() == 2);
  CHECK(r1.values[0] == make_rational(1, 4));
  CHECK(r1.values[1] == make_rational(9, 16));

  RegionResult r2 = region_classify(3, pt3(3, 4, 0, 1));
  CHECK(r2.l == 2);  // p1^2 = 9/16 < p1 = 3/4
  CHECK_FALSE(r2.boundary);

  RegionResult rb = region_classify(3, pt3(1, 2, 1, 4));
  CHECK(rb.boundary);  // p1 = 1/2 = p1^2 + p2
  CHECK(rb.l == 0);

  SUBCASE("a coarse grid finds representatives of both regions") {
    auto reps = find_region_points(3, SamplePlan::grid(8));
    REQUIRE(reps.count(1) == 1);
    REQUIRE(reps.count(2) == 1);
    CHECK(region_classify(3, reps.at(1)).l == 1);
    CHECK(region_classify(3, reps.at(2)).l == 2);
  }
}

TEST_CASE("perturbation certificates") {
  SamplePlan scan = SamplePlan::grid(64);

  PerturbationCertificate c = build_perturbation(3, pt3(1, 4, 1, 2), scan);
  CHECK(c.l == 1);
  CHECK(c.a == Rational(1));
  CHECK(c.margin == Rational(0));  // the base point itself is on the scan
  CHECK(c.points_checked == 2145);  // C(66, 2) grid points at r = 64
  CHECK(verify_certificate(c));

  PerturbationCertificate c2 = build_perturbation(3, pt3(3, 4, 0, 1), scan);
  CHECK(c2.l == 2);
  CHECK(verify_certificate(c2));

  SUBCASE("tampered certificates fail the independent recheck") {
    PerturbationCertificate bad = c;
    bad.margin += make_rational(1, 100);
    CHECK_FALSE(verify_certificate(bad));
    PerturbationCertificate bad2 = c;
    bad2.perturbed = bad2.perturbed + MultiPoly::constant(2, make_rational(1, 7));
    CHECK_FALSE(verify_certificate(bad2));
  }
  SUBCASE("boundary points are rejected") {
    CHECK(error_code_of([&] { build_perturbation(3, pt3(1, 2, 1, 4), scan); }) ==
          "BoundaryPoint");
  }
}

TEST_CASE("no-pointwise-largest demonstration") {
  SamplePlan scan = SamplePlan::grid(64);

  NoLargestReport rep = no_largest_demo(3, {}, scan);
  CHECK(rep.k == 3);
  CHECK(rep.regions == std::vector<int>{1, 2});
  REQUIRE(rep.certificates.size() == 2);
  for (const auto& cert : rep.certificates) {
    CHECK(cert.margin >= 0);
    CHECK(verify_certificate(cert));
  }

  SUBCASE("two points from one region are rejected") {
    CHECK(error_code_of([&] {
            no_largest_demo(3, {pt3(1, 4, 1, 2), pt3(1, 4, 5, 8)}, scan);
          }) == "RequiresTwoRegions");
  }
  SUBCASE("k = 4 works from auto-selected representatives") {
    NoLargestReport rep4 = no_largest_demo(4, {}, SamplePlan::grid(16));
    CHECK(rep4.regions.size() >= 2);
    for (const auto& cert : rep4.certificates) CHECK(verify_certificate(cert));
  }
}

TEST_CASE("closed-form k = 3 minimum") {
  K3MinCheck chk = verify_k3_m3(SamplePlan::grid(32));
  CHECK(chk.ok);
  CHECK(chk.checked == 561);  // C(34, 2)
  CHECK_FALSE(chk.first_mismatch.has_value());

  SUBCASE("formula values at pinned points") {
    // Interior tie: both branches equal 1/2.
    RegionResult r = region_classify(3, pt3(1, 2, 1, 4));
    CHECK(r.values[0] == make_rational(1, 2));
    CHECK(r.values[1] == make_rational(1, 2));
    // Edge p1 = 0: both branches vanish.
    RegionResult r0 = region_classify(3, pt3(0, 1, 1, 3));
    CHECK(r0.values[0] == 0);
    // Vertex p1 = 1.
    RegionResult r1 = region_classify(3, pt3(1, 1, 0, 1));
    CHECK(r1.values[0] == 1);
    CHECK(r1.values[1] == 1);
  }
}

TEST_CASE("k = 3 quadratic slice constraint and determinant identity") {
  K3HatConstraintReport rep = verify_k3_hat_constraint();
  CHECK(rep.ok());
  CHECK(rep.constraint_matches);
  CHECK(rep.identity_holds);
  REQUIRE(rep.coeff_names.size() >= 3);

  // Spot check the shared value: at (a, c) = (2, 3),
  // -(a - c - 1)^2 = -4.
  std::vector<Rational> ac = {Rational(2), Rational(3)};
  CHECK(rep.det_lhs.eval(ac) == Rational(-4));
  CHECK(rep.det_rhs.eval(ac) == Rational(-4));
}

TEST_CASE("dominance probe at k = 3 pins the product bound") {
  DominanceProbe probe = dominance_search(3, ClassKind::Hat, 16);
  CHECK(probe.basis_size == 6);  // quadratic monomials in two variables
  CHECK(probe.objective <= 1e-6);
  CHECK_FALSE(probe.anomalous);
  CHECK(probe.candidate == probe.q_poly);
  CHECK(probe.recheck.in_class);
  CHECK(probe.recheck.dominates);
  CHECK_FALSE(probe.recheck.distinct);

  SUBCASE("windowed variant is also clean") {
    DominanceProbe w = dominance_search(3, ClassKind::Window, 16);
    CHECK(w.objective <= 1e-6);
    CHECK_FALSE(w.anomalous);
  }
}

TEST_CASE("class kind names") {
  CHECK(class_kind_name(ClassKind::Window) == "a");
  CHECK(class_kind_name(ClassKind::Hat) == "a-hat");
}
