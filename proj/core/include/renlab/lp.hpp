#pragma once

#include <vector>

namespace renlab {

/// Dense linear program in the one form the dominance probe generates:
///
///   maximize    c . z
///   subject to  A . z <= b,   b >= 0,   z free
///
/// b >= 0 makes the all-slack basis feasible, so a single primal simplex
/// phase suffices (the probe reaches this form by re-centering at a known
/// feasible point and eliminating equalities exactly beforehand).
struct LpProblem {
  int nvars = 0;
  std::vector<double> objective;           // size nvars
  std::vector<std::vector<double>> rows;   // each size nvars
  std::vector<double> rhs;                 // size rows.size(), all >= 0
};

struct LpResult {
  enum class Status { Optimal, Unbounded };
  Status status = Status::Optimal;
  std::vector<double> x;
  double objective = 0.0;
  long iterations = 0;
};

/// Deterministic dense simplex: Dantzig pivoting with a Bland fallback after
/// degenerate stalls, smallest-index tie breaking. Errors: LPInfeasible if
/// some rhs is negative (contract violation), LPStall on iteration overrun.
LpResult solve_lp(const LpProblem& problem);

}  // namespace renlab
