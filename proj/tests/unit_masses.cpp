#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renlab/masses.hpp"
#include "renlab/rational.hpp"
#include "renlab/util.hpp"
#include "testutil.hpp"

using namespace renlab;
using testor::error_code_of;

TEST_CASE("rational parsing and rendering") {
  CHECK(rational_to_string(rational_from_string("2/4")) == "1/2");
  CHECK(rational_to_string(rational_from_string("-3/9")) == "-1/3");
  CHECK(rational_to_string(rational_from_string("7")) == "7");
  CHECK(rational_to_string(make_rational(4, 2)) == "2");
  CHECK(error_code_of([] { rational_from_string("0.5"); }) == "InvalidRational");
  CHECK(error_code_of([] { rational_from_string(""); }) == "InvalidRational");
  CHECK(error_code_of([] { rational_from_string("1/0"); }) == "InvalidRational");
  CHECK(error_code_of([] { rational_from_string("x"); }) == "InvalidRational");
}

TEST_CASE("decimal conversions") {
  CHECK(rational_from_decimal("0.25") == make_rational(1, 4));
  CHECK(rational_from_decimal("1e-6") == make_rational(1, 1000000));
  CHECK(rational_from_decimal("2.5e1") == Rational(25));
  CHECK(decimal_string(make_rational(1, 3), 6) == "0.333333");
  CHECK(decimal_string(make_rational(1, 2), 0) == "1");   // ties away from zero
  CHECK(decimal_string(make_rational(-1, 2), 0) == "-1");
  CHECK(decimal_string(make_rational(1, 4), 1) == "0.3");
  CHECK(decimal_string(Rational(2), 3) == "2.000");
}

TEST_CASE("mass vector construction") {
  MassVector m = parse_masses("1/2,1/4,1/4");
  CHECK(m.k == 3);
  CHECK(m.p[0] == make_rational(1, 2));
  CHECK(m.mean() == make_rational(7, 4));

  SUBCASE("trailing zeros are stripped") {
    CHECK(parse_masses("1/2,1/2,0,0").k == 2);
  }
  SUBCASE("validation errors") {
    CHECK(error_code_of([] { parse_masses("1/2,1/4"); }) == "NotNormalized");
    CHECK(error_code_of([] { parse_masses("3/2,-1/2"); }) == "NegativeMass");
    CHECK(error_code_of([] { parse_masses("0.5,0.5"); }) == "InvalidRational");
    CHECK(error_code_of([] { parse_masses("1/2,,1/2"); }) == "InvalidRational");
    CHECK(error_code_of([] { make_masses({}); }) == "EmptySupport");
    CHECK(error_code_of([] { make_masses({Rational(0), Rational(0)}); }) ==
          "NotNormalized");
  }
}

TEST_CASE("period is the gcd of the support") {
  CHECK(period(parse_masses("1/2,1/2")) == 1);
  CHECK(period(parse_masses("0,1")) == 2);
  CHECK(period(parse_masses("0,0,1")) == 3);
  CHECK(period(parse_masses("0,1/2,0,1/2")) == 2);
  CHECK(period(parse_masses("0,1/2,1/2")) == 1);
  CHECK(period(parse_masses("1")) == 1);
}

TEST_CASE("simplex points and laws round trip") {
  SimplexPoint pt = make_simplex_point(3, {make_rational(1, 4), make_rational(1, 2)});
  MassVector m = from_simplex_point(pt);
  CHECK(m.k == 3);
  CHECK(m.p[2] == make_rational(1, 4));  // completed third mass
  CHECK(truncate_to_simplex(m, 3).q == pt.q);

  SUBCASE("a stripped law still lifts back") {
    SimplexPoint edge = make_simplex_point(3, {make_rational(1, 2), make_rational(1, 2)});
    MassVector stripped = from_simplex_point(edge);
    CHECK(stripped.k == 2);  // completed mass is zero and drops
    CHECK(truncate_to_simplex(stripped, 3).q == edge.q);
  }
  SUBCASE("validation") {
    CHECK(error_code_of([] {
            make_simplex_point(3, {Rational(1), Rational(1)});
          }) == "NotNormalized");
    CHECK(error_code_of([] {
            make_simplex_point(3, {Rational(-1), Rational(0)});
          }) == "NegativeMass");
    CHECK(error_code_of([] {
            make_simplex_point(3, {Rational(0), Rational(0), Rational(0)});
          }) == "ArityMismatch");
  }
}

TEST_CASE("grid enumeration is exact and lexicographic") {
  std::vector<SimplexPoint> pts = sample_simplex(3, SamplePlan::grid(2));
  REQUIRE(pts.size() == 6);  // C(2+2, 2)
  auto coord = [&](std::size_t i, std::size_t j) { return pts[i].q[j]; };
  // Ascending lexicographic order over (q1, q2):
  CHECK(coord(0, 0) == 0);
  CHECK(coord(0, 1) == 0);
  CHECK(coord(1, 1) == make_rational(1, 2));
  CHECK(coord(2, 1) == 1);
  CHECK(coord(3, 0) == make_rational(1, 2));
  CHECK(coord(3, 1) == 0);
  CHECK(coord(4, 0) == make_rational(1, 2));
  CHECK(coord(4, 1) == make_rational(1, 2));
  CHECK(coord(5, 0) == 1);
  CHECK(coord(5, 1) == 0);

  SUBCASE("cardinality matches the stars-and-bars count") {
    for (int k = 2; k <= 5; ++k)
      for (int r = 1; r <= 6; ++r)
        CHECK(sample_simplex(k, SamplePlan::grid(r)).size() ==
              binomial(static_cast<unsigned>(r + k - 1), static_cast<unsigned>(k - 1)));
  }
  SUBCASE("zero resolution is rejected") {
    CHECK(error_code_of([] { sample_simplex(3, SamplePlan::grid(0)); }) ==
          "ResolutionZero");
  }
}

TEST_CASE("random sampling is seeded and valid") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    SimplexPoint a = random_simplex_point(4, 7, i);
    SimplexPoint b = random_simplex_point(4, 7, i);
    CHECK(a == b);
    Rational sum = 0;
    for (const Rational& c : a.q) {
      CHECK(c >= 0);
      sum += c;
    }
    CHECK(sum <= 1);
  }
  CHECK_FALSE(random_simplex_point(4, 7, 0) == random_simplex_point(4, 8, 0));

  std::vector<SimplexPoint> plan_pts = sample_simplex(3, SamplePlan::random(5, 11));
  CHECK(plan_pts.size() == 5);
  CHECK(plan_pts == sample_simplex(3, SamplePlan::random(5, 11)));
}

TEST_CASE("text helpers") {
  CHECK(masses_text(parse_masses("1/2,1/4,1/4")) == "1/2,1/4,1/4");
  SimplexPoint pt = make_simplex_point(3, {make_rational(1, 4), make_rational(1, 2)});
  CHECK(simplex_point_text(pt) == "(1/4, 1/2)");
  CHECK(SamplePlan::grid(8).describe() == "grid r=8");
  CHECK(SamplePlan::random(10, 3).describe() == "random count=10 seed=3");
}
