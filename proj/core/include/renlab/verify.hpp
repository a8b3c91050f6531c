#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace renlab {

/// Work sizes for the claim suite. "default" is the acceptance-scale run;
/// "tiny" is a fast smoke profile with the same claim list.
struct VerifyBudget {
  std::string name;

  std::uint64_t corpus_oracle;  // laws checked against path enumeration
  int oracle_n_max;
  int oracle_k_max;

  std::uint64_t corpus_window;  // laws for extremes/sandwich/limit sweeps
  int window_k_max;
  int window_horizon_mult;      // horizon = mult * k

  int blackwell_n;              // far-horizon gap index
  int blackwell_shrink_n;       // H for the gap(2H) <= gap(H) check

  int structure_l_max;
  int structure_k_max;
  int structure_grid_r;
  int coeffsum_l_max;

  int bounds_k_max;
  int bounds_grid_r;

  int m3_grid_r;
  int lp_grid_r;
  int demo_scan_r;

  int mc_cases;
  std::uint64_t mc_walks;
  int mc_n_max;
  double mc_z;

  static VerifyBudget standard();
  static VerifyBudget tiny();
  static VerifyBudget by_name(const std::string& name);  // Errors: OutOfRange
};

struct ClaimResult {
  std::string name;    // stable slug, e.g. "sandwich-envelopes"
  std::string title;   // one-line statement of the claim
  bool pass = false;
  std::uint64_t checked = 0;  // instances examined
  std::string detail;  // deterministic summary (no timings)
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::string budget;
  int jobs = 1;
  std::vector<ClaimResult> claims;
  bool all_pass = false;
};

using ClaimProgress = std::function<void(const ClaimResult&)>;

/// Run every claim; progress (if set) fires after each claim completes.
VerifyReport run_verify(std::uint64_t seed, const VerifyBudget& budget, int jobs = 0,
                        const ClaimProgress& progress = {});

}  // namespace renlab
