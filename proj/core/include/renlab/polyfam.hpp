#pragma once

#include <optional>
#include <vector>

#include "renlab/masses.hpp"
#include "renlab/poly.hpp"

namespace renlab {

/// The l-th renewal mass as a polynomial in the step masses, in two
/// coordinate systems:
///  - composition_form R_l: variables p1..p_min(k,l), one positive integer
///    term per multiset of parts; R_l(p) sums p over all compositions of l
///    into parts <= k.
///  - substituted: variables p1..p_{k-1} with p_k rewritten as 1 - sum, the
///    coordinate system of the solved simplex A_k.
struct PolyFamilyEntry {
  int l = 0;
  int k = 0;
  MultiPoly substituted;
  MultiPoly composition_form;

  PolyFamilyEntry() : substituted(1), composition_form(1) {}
};

/// Build P_l for arity k (l >= 1, k >= 2).
PolyFamilyEntry build_P(int l, int k);

/// Build P_1..P_lmax sharing one recurrence pass.
std::vector<PolyFamilyEntry> build_P_family(int k, int l_max);

/// The universal product bound Q_n = prod_{j=1}^{n-1} (p1 + ... + pj) in
/// the simplex variables p1..p_{k-1}; Q_1 = 1. Errors: OutOfRange unless
/// 1 <= n <= k.
MultiPoly build_Q(int n, int k);

/// Windowed minimum of the mass polynomials: min over l = 1..k-1 of
/// P_l(point), with the smallest attaining l.
struct MinPolyResult {
  Rational value;
  int l = 0;
};

MinPolyResult min_poly_value(int k, const SimplexPoint& point);
MinPolyResult min_poly_value(const std::vector<PolyFamilyEntry>& family,
                             const SimplexPoint& point);

/// Check the weighted scaling law R_l(s*v1, s^2*v2, ..., s^j*vj, ...) =
/// s^l * R_l(v) at one point (values.size() == min(k,l)).
bool weighted_scaling_check(int l, int k, const Rational& s,
                            const std::vector<Rational>& values);

/// True iff every monomial of the composition form satisfies
/// sum_j j * e_j == l (the graded structure behind the scaling law).
bool composition_weights_uniform(const MultiPoly& composition_form, int l);

/// Largest exponent of each variable p_j (1-based, j = 1..nvars).
std::vector<int> max_powers(const MultiPoly& poly);

/// Difference transform: hat(P)(p) = P(p1, p2 - p1, ..., p_{k-1} - p_{k-2}).
/// Pre: poly.nvars() == k - 1.
MultiPoly hat_transform(const MultiPoly& poly, int k);

/// j-th slice of the transform: hat(P) with variables p_{j+1}..p_{k-1}
/// fixed to 1, leaving a polynomial in p1..pj (1 <= j <= k-1).
MultiPoly hat_slice(const MultiPoly& poly, int k, int j);

/// Outcome of a sampled class-membership test. Sampling can only certify a
/// polynomial OUT of a class (exact witness) or leave it unfalsified.
struct ClassVerdict {
  enum class Status { NotFalsified, CertifiedOut };
  enum class Reason { None, Degree, Value, HatSliceDegree };

  Status status = Status::NotFalsified;
  Reason reason = Reason::None;
  // Reason::Value — the witness point and both sides of the failed bound:
  std::optional<SimplexPoint> witness;
  Rational lhs, rhs;
  // Reason::Degree / HatSliceDegree — the offending degree (and slice).
  int degree = 0;
  int slice_j = 0;
  std::uint64_t points_checked = 0;

  bool certified_out() const { return status == Status::CertifiedOut; }
};

/// Membership test against the windowed-minimum class: degree <= k-1 and
/// P <= min(P_1..P_{k-1}) at every sampled point of A_k.
ClassVerdict in_A_class(const MultiPoly& poly, int k, const SamplePlan& plan);

/// Refined class: additionally every hat slice satisfies deg(hat_j P) <= j.
ClassVerdict in_A_hat_class(const MultiPoly& poly, int k, const SamplePlan& plan);

}  // namespace renlab
