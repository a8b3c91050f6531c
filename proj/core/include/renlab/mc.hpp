#pragma once

#include <cstdint>
#include <vector>

#include "renlab/masses.hpp"
#include "renlab/rational.hpp"

namespace renlab {

/// Monte Carlo estimate of the renewal masses: u_hat[n] = fraction of
/// simulated walks that visit n, with the binomial standard error
/// sqrt(u_hat (1 - u_hat) / n_walks). Deterministic for a fixed seed
/// regardless of worker count (per-walk RNG streams).
struct McEstimate {
  MassVector masses;
  int n_max = 0;
  std::uint64_t n_walks = 0;
  std::uint64_t seed = 0;
  std::vector<double> u_hat;      // size n_max + 1, u_hat[0] = 1
  std::vector<double> stderr_;    // same size, 0 where u_hat is 0 or 1
};

/// Errors: OutOfRange (n_max < 1 or n_walks < 1).
McEstimate simulate(const MassVector& m, int n_max, std::uint64_t n_walks,
                    std::uint64_t seed, int jobs = 0);

/// One row of the estimator-vs-exact comparison.
struct McRow {
  int n = 0;
  Rational u_exact;
  double u_hat = 0.0;
  double se = 0.0;
  double z = 0.0;  // |u_hat - u_exact| / se (0 when se == 0)
};

/// Exact sequence vs the estimator: passes iff every row with positive
/// standard error has |z| <= z_threshold.
struct McCrossCheck {
  McEstimate estimate;
  std::vector<McRow> rows;      // n = 1..n_max
  double worst_z = 0.0;
  int worst_n = 0;
  double z_threshold = 0.0;
  bool pass = false;
};

McCrossCheck cross_check(const MassVector& m, int n_max, std::uint64_t n_walks,
                         std::uint64_t seed, double z_threshold = 5.0, int jobs = 0);

}  // namespace renlab
