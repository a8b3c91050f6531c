#pragma once

#include <optional>
#include <vector>

#include "renlab/masses.hpp"
#include "renlab/rational.hpp"

namespace renlab {

/// Renewal mass sequence u_0..u_{n_max} for a step law: u_0 = 1 and
/// u_n = sum_{l=1}^{min(n,k)} p_l * u_{n-l}, all values exact.
struct RenewalSeq {
  MassVector masses;
  int n_max = 0;
  std::vector<Rational> u;  // size n_max + 1, u[n] = u_n
};

RenewalSeq compute_renewal(const MassVector& m, int n_max);

/// Independent post-hoc check that `seq.u` satisfies the defining recurrence
/// (distinct code path from compute_renewal).
bool verify_recurrence(const RenewalSeq& seq);

/// Running extremes of the first support window: M = max u_1..u_k attained
/// at the smallest argmax, m = min u_1..u_{k-1} at the smallest argmin.
/// For k = 1 both degenerate to u_1 = 1 (degenerate flag set, argmin = 1).
struct ExtremesReport {
  Rational M;
  int argmax = 0;
  Rational m;
  int argmin = 0;
  bool degenerate = false;  // k == 1
};

ExtremesReport extremes(const MassVector& m);

/// Extremes read off a precomputed sequence (requires n_max >= k).
ExtremesReport extremes_of(const RenewalSeq& seq);

/// Witness report for the window law: u_n < M for n > k, and u_n > m for
/// n > k-1 when the law is aperiodic with p_1 > 0. Both strict bounds can
/// fail when p_1 = 0 (p = (0,0,0,0,1/2,1/2) has u_7 = m and u_11 = M), so
/// the lower bound is only claimed when it provably applies (min_checked)
/// and the upper scan reports the first violation honestly instead of
/// asserting. Errors: DegenerateLaw (some p_j = 1), HorizonTooShort
/// (horizon <= k).
struct WindowCheck {
  int horizon = 0;
  bool aperiodic = false;
  bool max_ok = false;
  std::optional<int> first_max_violation;
  bool min_checked = false;
  bool min_ok = false;
  std::optional<int> first_min_violation;

  bool ok() const { return max_ok && (!min_checked || min_ok); }
};

WindowCheck verify_extremes_window(const MassVector& m, int horizon);

/// Sandwich envelopes for n >= k: b_n = max of the k previous values
/// u_{n-1}..u_{n-k}, c_n = min of the same window. b is non-increasing and c
/// non-decreasing. Errors: HorizonTooShort (seq.n_max < k).
struct Envelopes {
  int start = 0;            // first index (== k)
  std::vector<Rational> b;  // b[i] = b_{start+i}
  std::vector<Rational> c;
};

Envelopes envelopes(const RenewalSeq& seq);

/// Limit of u_n for an aperiodic law: 1 / mean step.
/// Errors: PeriodicWalk (period > 1).
Rational blackwell_limit(const MassVector& m);

/// Gap profile |u_n - limit| for n = 0..n_max; converged iff the final gap
/// is strictly below `threshold`. Errors: PeriodicWalk.
struct ConvergenceProfile {
  Rational limit;
  std::vector<Rational> gaps;
  bool converged = false;
};

ConvergenceProfile convergence_profile(const MassVector& m, int n_max,
                                       const Rational& threshold);

}  // namespace renlab
