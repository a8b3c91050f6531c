#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "renlab/renewal.hpp"
#include "testutil.hpp"

using namespace renlab;
using testor::error_code_of;

TEST_CASE("frozen sequences") {
  SUBCASE("two equal masses") {
    RenewalSeq seq = compute_renewal(parse_masses("1/2,1/2"), 4);
    std::vector<Rational> expect = {Rational(1), make_rational(1, 2),
                                    make_rational(3, 4), make_rational(5, 8),
                                    make_rational(11, 16)};
    CHECK(seq.u == expect);
  }
  SUBCASE("three masses") {
    RenewalSeq seq = compute_renewal(parse_masses("1/2,1/4,1/4"), 6);
    CHECK(seq.u[1] == make_rational(1, 2));
    CHECK(seq.u[2] == make_rational(1, 2));
    CHECK(seq.u[3] == make_rational(5, 8));
    CHECK(seq.u[4] == make_rational(9, 16));
    CHECK(seq.u[6] == make_rational(37, 64));
  }
  SUBCASE("single mass is constant") {
    RenewalSeq seq = compute_renewal(parse_masses("1"), 5);
    for (const Rational& v : seq.u) CHECK(v == 1);
  }
  SUBCASE("periodic law alternates") {
    RenewalSeq seq = compute_renewal(parse_masses("0,1"), 6);
    for (int n = 0; n <= 6; ++n) CHECK(seq.u[static_cast<std::size_t>(n)] ==
                                       (n % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("recurrence matches the cut-set enumeration oracle") {
  for (const char* law : {"1/2,1/2", "1/2,1/4,1/4", "1/3,1/3,1/3", "2/3,0,1/3",
                          "1/10,2/10,3/10,4/10", "0,0,1/2,1/2"}) {
    MassVector m = parse_masses(law);
    RenewalSeq seq = compute_renewal(m, 14);
    for (int n = 0; n <= 14; ++n)
      CHECK(seq.u[static_cast<std::size_t>(n)] == testor::oracle_u(m, n));
  }
}

TEST_CASE("verify_recurrence flags corruption") {
  RenewalSeq seq = compute_renewal(parse_masses("1/2,1/4,1/4"), 10);
  CHECK(verify_recurrence(seq));
  seq.u[7] += make_rational(1, 1000);
  CHECK_FALSE(verify_recurrence(seq));
}

TEST_CASE("window extremes") {
  ExtremesReport ext = extremes(parse_masses("1/2,1/4,1/4"));
  CHECK(ext.M == make_rational(5, 8));
  CHECK(ext.argmax == 3);
  CHECK(ext.m == make_rational(1, 2));
  CHECK(ext.argmin == 1);
  CHECK_FALSE(ext.degenerate);

  SUBCASE("two masses") {
    ExtremesReport e2 = extremes(parse_masses("1/2,1/2"));
    CHECK(e2.M == make_rational(3, 4));
    CHECK(e2.argmax == 2);
    CHECK(e2.m == make_rational(1, 2));
    CHECK(e2.argmin == 1);
  }
  SUBCASE("smallest attaining index wins ties") {
    // u_1 = u_2 = 1/2 for 1/2,1/4,1/4: argmin must be 1.
    CHECK(extremes(parse_masses("1/2,1/4,1/4")).argmin == 1);
  }
  SUBCASE("degenerate single-step law") {
    ExtremesReport e1 = extremes(parse_masses("1"));
    CHECK(e1.degenerate);
    CHECK(e1.M == 1);
    CHECK(e1.m == 1);
    CHECK(e1.argmax == 1);
    CHECK(e1.argmin == 1);
  }
}

TEST_CASE("window law verification") {
  WindowCheck chk = verify_extremes_window(parse_masses("1/2,1/4,1/4"), 40);
  CHECK(chk.aperiodic);
  CHECK(chk.min_checked);
  CHECK(chk.ok());

  SUBCASE("strict bounds need a positive first mass") {
    // Aperiodic but p_1 = 0: the strict lower bound is not even claimed
    // (u_7 = 0 ties the windowed minimum), and the strict upper bound
    // genuinely fails -- u_11 = p_5 u_6 + p_6 u_5 = 1/2 equals the window
    // maximum. The checker must report the violation, not mask it.
    WindowCheck z = verify_extremes_window(parse_masses("0,0,0,0,1/2,1/2"), 60);
    CHECK(z.aperiodic);
    CHECK_FALSE(z.min_checked);
    CHECK_FALSE(z.max_ok);
    REQUIRE(z.first_max_violation.has_value());
    CHECK(*z.first_max_violation == 11);
    CHECK_FALSE(z.ok());
  }
  SUBCASE("periodic laws skip the lower bound") {
    WindowCheck p = verify_extremes_window(parse_masses("0,1/2,0,1/2"), 40);
    CHECK_FALSE(p.aperiodic);
    CHECK_FALSE(p.min_checked);
    CHECK(p.max_ok);
  }
  SUBCASE("errors") {
    CHECK(error_code_of([] { verify_extremes_window(parse_masses("1"), 10); }) ==
          "DegenerateLaw");
    CHECK(error_code_of([] {
            verify_extremes_window(parse_masses("1/2,1/2"), 2);
          }) == "HorizonTooShort");
  }
}

TEST_CASE("sandwich envelopes") {
  RenewalSeq seq = compute_renewal(parse_masses("1/2,1/2"), 4);
  Envelopes env = envelopes(seq);
  CHECK(env.start == 2);
  CHECK(env.b == std::vector<Rational>{Rational(1), make_rational(3, 4),
                                       make_rational(3, 4)});
  CHECK(env.c == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2),
                                       make_rational(5, 8)});

  SUBCASE("monotone and strict on a longer run") {
    RenewalSeq s = compute_renewal(parse_masses("1/2,1/4,1/4"), 60);
    Envelopes e = envelopes(s);
    for (std::size_t i = 1; i < e.b.size(); ++i) {
      CHECK(e.b[i] <= e.b[i - 1]);
      CHECK(e.c[i] >= e.c[i - 1]);
    }
    for (std::size_t i = 0; i < e.b.size(); ++i) {
      const Rational& u = s.u[static_cast<std::size_t>(e.start) + i];
      CHECK(e.c[i] < u);
      CHECK(u < e.b[i]);
    }
  }
  SUBCASE("horizon must reach the window") {
    CHECK(error_code_of([] {
            envelopes(compute_renewal(parse_masses("1/2,1/4,1/4"), 2));
          }) == "HorizonTooShort");
  }
}

TEST_CASE("long-run limit") {
  CHECK(blackwell_limit(parse_masses("1/2,1/2")) == make_rational(2, 3));
  CHECK(blackwell_limit(parse_masses("1/2,1/4,1/4")) == make_rational(4, 7));
  CHECK(blackwell_limit(parse_masses("1")) == 1);
  CHECK(error_code_of([] { blackwell_limit(parse_masses("0,1")); }) ==
        "PeriodicWalk");

  SUBCASE("convergence profile") {
    ConvergenceProfile prof =
        convergence_profile(parse_masses("1/2,1/2"), 64, make_rational(1, 1000000));
    CHECK(prof.limit == make_rational(2, 3));
    CHECK(prof.converged);
    // |u_n - 2/3| = 1/(3*2^n) exactly for this law.
    CHECK(prof.gaps[4] == make_rational(1, 48));
    CHECK(prof.gaps[64] < make_rational(1, 1000000));
    CHECK(error_code_of([] {
            convergence_profile(parse_masses("0,1"), 8, make_rational(1, 10));
          }) == "PeriodicWalk");
  }
}
