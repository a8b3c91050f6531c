#include "renlab/lp.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "renlab/errors.hpp"

namespace renlab {

namespace {
constexpr double kEps = 1e-9;
constexpr long kMaxIterations = 200000;
constexpr long kStallLimit = 64;  // degenerate pivots before switching to Bland
}  // namespace

LpResult solve_lp(const LpProblem& problem) {
  const std::size_t m = problem.rows.size();
  const std::size_t n = static_cast<std::size_t>(problem.nvars);
  for (std::size_t i = 0; i < m; ++i)
    if (problem.rhs[i] < 0)
      throw Error("LPInfeasible", "negative right-hand side in row " + std::to_string(i) +
                                      "; the slack basis is not feasible");

  // Columns: z+ (n), z- (n), slacks (m). Free z is split z = z+ - z-.
  const std::size_t cols = 2 * n + m;
  // Tableau rows 0..m-1: constraints; row m: reduced costs of the
  // maximization (initially c itself; optimal when none is positive).
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = problem.rows[i][j];
      t[i][n + j] = -problem.rows[i][j];
    }
    t[i][2 * n + i] = 1.0;
    t[i][cols] = problem.rhs[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    t[m][j] = problem.objective[j];
    t[m][n + j] = -problem.objective[j];
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = 2 * n + i;

  LpResult result;
  long stall = 0;
  bool bland = false;
  while (true) {
    if (result.iterations++ > kMaxIterations)
      throw Error("LPStall", "simplex iteration limit exceeded");

    // Entering column: positive objective-row entry (Dantzig: most positive;
    // Bland: smallest index).
    std::size_t enter = cols;
    double best = kEps;
    for (std::size_t j = 0; j < cols; ++j) {
      double v = t[m][j];
      if (v > (bland ? kEps : best)) {
        enter = j;
        if (bland) break;
        best = v;
      }
    }
    if (enter == cols) break;  // optimal

    // Ratio test over positive column entries; smallest index breaks ties.
    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double a = t[i][enter];
      if (a > kEps) {
        double ratio = t[i][cols] / a;
        if (leave == m || ratio < best_ratio - kEps) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) {
      result.status = LpResult::Status::Unbounded;
      return result;
    }

    if (best_ratio < kEps) {
      if (++stall > kStallLimit) bland = true;
    } else {
      stall = 0;
      bland = false;
    }

    // Pivot on (leave, enter).
    double piv = t[leave][enter];
    for (std::size_t j = 0; j <= cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n)
      result.x[basis[i]] += t[i][cols];
    else if (basis[i] < 2 * n)
      result.x[basis[i] - n] -= t[i][cols];
  }
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) result.objective += problem.objective[j] * result.x[j];
  result.status = LpResult::Status::Optimal;
  return result;
}

}  // namespace renlab
