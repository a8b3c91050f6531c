#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "renlab/masses.hpp"
#include "renlab/poly.hpp"
#include "renlab/polyfam.hpp"

namespace renlab {

/// Which of P_1..P_{k-1} attains the windowed minimum at a point; boundary
/// means the minimum is tied there. Pre: k >= 3.
struct RegionResult {
  int l = 0;                     // attaining index (0 on boundary)
  bool boundary = false;
  std::vector<Rational> values;  // P_1..P_{k-1} at the point
};

RegionResult region_classify(int k, const SimplexPoint& point);

/// First grid point strictly inside each region, keyed by region index.
std::map<int, SimplexPoint> find_region_points(int k, const SamplePlan& plan);

/// Certificate that the quadratically perturbed polynomial
/// P~ = P_l - a * |p - p0|^2 still lies under the windowed minimum on the
/// scan: margin = min over scanned points of (m - P~) >= 0. P~ beats P_l at
/// every point other than p0, so no single P_l can be pointwise-largest.
struct PerturbationCertificate {
  int k = 0;
  int l = 0;               // region of the base point
  SimplexPoint base;
  Rational a;              // accepted perturbation size
  Rational margin;         // min over scan of (m - P~), exact
  SamplePlan scan;
  std::uint64_t points_checked = 0;
  MultiPoly perturbed;     // P~ for the accepted a

  PerturbationCertificate() : perturbed(1) {}
};

/// Search a = 1, 2, 4, ..., 2^32 for a nonnegative margin (the margin is
/// non-decreasing in a, and on a grid of spacing 1/r the size a = r^2 always
/// suffices). Errors: BoundaryPoint (base on a region boundary), NoPositiveA
/// (budget exhausted without a certificate).
PerturbationCertificate build_perturbation(int k, const SimplexPoint& base,
                                           const SamplePlan& scan);

/// Independent exact re-validation of a certificate: recomputes the margin
/// with the windowed minimum taken from the renewal recurrence (not the
/// polynomial family) and compares.
bool verify_certificate(const PerturbationCertificate& cert);

/// Two-region demonstration: certificates from points in at least two
/// distinct regions, each findable by the perturbation search.
/// Errors: RequiresTwoRegions, BoundaryPoint.
struct NoLargestReport {
  int k = 0;
  SamplePlan scan;
  std::vector<int> regions;  // distinct regions certified, ascending
  std::vector<PerturbationCertificate> certificates;
};

/// points empty -> canonical demo points for k = 3, else one representative
/// per region from a coarse grid sweep.
NoLargestReport no_largest_demo(int k, std::vector<SimplexPoint> points,
                                const SamplePlan& scan);

/// Exact sweep of the closed-form k = 3 minimum: the windowed minimum from
/// the renewal recurrence equals min(p1, p1^2 + p2) at every planned point.
struct K3MinCheck {
  bool ok = false;
  std::uint64_t checked = 0;
  std::optional<SimplexPoint> first_mismatch;
  Rational recurrence_value, formula_value;  // sides at the mismatch
};

K3MinCheck verify_k3_m3(const SamplePlan& plan);

/// Symbolic derivation for k = 3 quadratics P = a*p1^2 + b*p1*p2 + c*p2^2 +
/// d*p1 + e*p2 + f: the coefficient of p1^2 in P(p1, 1-p1) is a - b + c, so
/// the 1-slice degree cap forces b = a + c; under that constraint
/// 4(a-1)c - (b-1)^2 = -(a-c-1)^2 identically in (a, c).
struct K3HatConstraintReport {
  MultiPoly p1sq_coefficient;       // in coefficient variables a..f
  std::vector<std::string> coeff_names;
  bool constraint_matches = false;  // p1sq_coefficient == a - b + c
  MultiPoly det_lhs, det_rhs;       // both in (a, c), after b -> a + c
  std::vector<std::string> det_names;
  bool identity_holds = false;

  bool ok() const { return constraint_matches && identity_holds; }

  K3HatConstraintReport() : p1sq_coefficient(1), det_lhs(1), det_rhs(1) {}
};

K3HatConstraintReport verify_k3_hat_constraint();

enum class ClassKind { Window, Hat };  // the A / A-hat constraint sets

std::string class_kind_name(ClassKind kind);

/// Exact revalidation of the LP candidate on a refined grid.
struct ExactRecheck {
  int grid_r = 0;
  bool in_class = true;    // candidate <= windowed min at every point
  bool dominates = true;   // candidate >= Q_k at every point
  bool distinct = false;   // candidate != Q_k as polynomials
  std::optional<SimplexPoint> witness;  // first failed point, if any
};

/// LP search for an in-class polynomial dominating the product bound Q_k on
/// a grid: maximize total on-grid improvement subject to Q >= Q_k and
/// Q <= windowed min, with class constraints eliminated exactly beforehand.
/// An anomaly = improvement above tol that survives the exact recheck.
struct DominanceProbe {
  int k = 0;
  ClassKind class_kind = ClassKind::Hat;
  int grid_r = 0;
  int basis_size = 0;      // candidate coefficients (degree <= k-1 monomials)
  int null_dim = 0;        // free dimensions after class constraints
  double objective = 0.0;  // LP total improvement (>= 0)
  long lp_iterations = 0;
  MultiPoly q_poly;        // Q_k
  MultiPoly candidate;     // exact candidate reconstructed from the LP
  ExactRecheck recheck;
  double tol = 0.0;
  bool anomalous = false;

  DominanceProbe() : q_poly(1), candidate(1) {}
};

/// Errors: LPInfeasible (encoding bug: Q_k above the windowed min at a grid
/// point), LPUnbounded (missing constraint), ResolutionZero.
DominanceProbe dominance_search(int k, ClassKind kind, int grid_r, double tol = 1e-6);

}  // namespace renlab
