#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renlab/lp.hpp"
#include "testutil.hpp"

using namespace renlab;
using testor::error_code_of;

TEST_CASE("simplex solves a small bounded program") {
  // max x + y  s.t.  x <= 1, y <= 2  ->  3 at (1, 2).
  LpProblem p;
  p.nvars = 2;
  p.objective = {1.0, 1.0};
  p.rows = {{1.0, 0.0}, {0.0, 1.0}};
  p.rhs = {1.0, 2.0};

  LpResult r = solve_lp(p);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(3.0).epsilon(1e-12));
  REQUIRE(r.x.size() == 2);
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.x[1] == doctest::Approx(2.0));
  CHECK(r.iterations > 0);
}

TEST_CASE("free variables can go negative") {
  // max -x  s.t.  -x <= 2  ->  objective 2 at x = -2.
  LpProblem p;
  p.nvars = 1;
  p.objective = {-1.0};
  p.rows = {{-1.0}};
  p.rhs = {2.0};

  LpResult r = solve_lp(p);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(2.0));
  CHECK(r.x[0] == doctest::Approx(-2.0));
}

TEST_CASE("an uncapped improving direction is reported unbounded") {
  LpProblem p;
  p.nvars = 2;
  p.objective = {1.0, 0.0};
  p.rows = {{0.0, 1.0}};  // x unconstrained above
  p.rhs = {5.0};

  LpResult r = solve_lp(p);
  CHECK(r.status == LpResult::Status::Unbounded);
}

TEST_CASE("zero objective returns the base point") {
  LpProblem p;
  p.nvars = 2;
  p.objective = {0.0, 0.0};
  p.rows = {{1.0, 1.0}};
  p.rhs = {1.0};

  LpResult r = solve_lp(p);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(0.0));
}

TEST_CASE("redundant and degenerate rows are handled") {
  // max x + y with duplicated/tight constraints; optimum is still 2.
  LpProblem p;
  p.nvars = 2;
  p.objective = {1.0, 1.0};
  p.rows = {{1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  p.rhs = {1.0, 1.0, 1.0, 2.0};

  LpResult r = solve_lp(p);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(2.0));
}

TEST_CASE("negative right-hand side violates the contract") {
  LpProblem p;
  p.nvars = 1;
  p.objective = {1.0};
  p.rows = {{1.0}};
  p.rhs = {-1.0};
  CHECK(error_code_of([&] { solve_lp(p); }) == "LPInfeasible");
}

TEST_CASE("solutions are deterministic") {
  LpProblem p;
  p.nvars = 3;
  p.objective = {1.0, 1.0, 1.0};
  p.rows = {{1.0, 0.0, 0.0},
            {0.0, 1.0, 0.0},
            {0.0, 0.0, 1.0},
            {1.0, 1.0, 1.0}};
  p.rhs = {2.0, 3.0, 4.0, 8.0};  // box caps 9, the sum cap binds at 8

  LpResult a = solve_lp(p);
  LpResult b = solve_lp(p);
  REQUIRE(a.status == LpResult::Status::Optimal);
  CHECK(a.objective == b.objective);
  CHECK(a.x == b.x);
  CHECK(a.iterations == b.iterations);
  CHECK(a.objective == doctest::Approx(8.0));
}
