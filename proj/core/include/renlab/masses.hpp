#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "renlab/rational.hpp"

namespace renlab {

/// A finite step law p = (p_1, ..., p_k): exact masses, p_l >= 0, sum = 1,
/// p_k > 0 (trailing zeros are stripped on construction so k is the true
/// support bound). Construct via make_masses / from_simplex_point.
struct MassVector {
  int k = 0;
  std::vector<Rational> p;  // size k, 1-based law stored 0-based: p[l-1] = p_l

  /// Mean step E = sum l * p_l.
  Rational mean() const;

  bool operator==(const MassVector&) const = default;
};

/// A point of the solved simplex A_k: coordinates q = (p_1, ..., p_{k-1})
/// with q_i >= 0 and sum <= 1; the elided last mass is 1 - sum.
struct SimplexPoint {
  int k = 0;
  std::vector<Rational> q;  // size k - 1

  bool operator==(const SimplexPoint&) const = default;
};

enum class SampleMode { Grid, Random };

/// How to sweep A_k: either the full lattice {a/r : sum a_i <= r} in
/// ascending lexicographic order, or `count` seeded pseudo-random points.
struct SamplePlan {
  SampleMode mode = SampleMode::Grid;
  int resolution = 0;        // grid: denominator r >= 1
  std::uint64_t count = 0;   // random: number of points
  std::uint64_t seed = 0;    // random: master seed

  static SamplePlan grid(int resolution);
  static SamplePlan random(std::uint64_t count, std::uint64_t seed);

  std::string describe() const;
};

/// Validate and normalize a mass list (strips trailing zeros).
/// Errors: NegativeMass, NotNormalized, EmptySupport.
MassVector make_masses(const std::vector<Rational>& values);

/// Parse "1/2,1/4,1/4" into a MassVector.
MassVector parse_masses(const std::string& csv);

/// Lift a simplex point to the full law (appends 1 - sum, strips trailing
/// zeros). Errors: OutsideSimplex via make_masses guards.
MassVector from_simplex_point(const SimplexPoint& pt);

/// First k-1 masses of m as a point of A_k (k taken from the nominal arity
/// argument, which may exceed m.k after zero-stripping).
SimplexPoint truncate_to_simplex(const MassVector& m, int k);

/// Validate raw coordinates as a point of A_k.
SimplexPoint make_simplex_point(int k, const std::vector<Rational>& coords);

/// gcd of the support {l : p_l > 0}; the law is aperiodic iff this is 1.
int period(const MassVector& m);

/// Number of points the plan visits on A_k (grid: C(r+k-1, k-1)).
std::uint64_t sample_count(int k, const SamplePlan& plan);

/// Visit every planned point in deterministic order (grid: ascending lex;
/// random: by index). fn receives the point and its 0-based index.
/// Errors: ResolutionZero for a grid plan with r < 1.
void for_each_sample(int k, const SamplePlan& plan,
                     const std::function<void(const SimplexPoint&, std::uint64_t)>& fn);

/// Materialized sample sweep, in for_each_sample order.
std::vector<SimplexPoint> sample_simplex(int k, const SamplePlan& plan);

/// The index-th random point of a Random plan (independent of the others):
/// sorted-spacings construction over a 2^32 lattice, exact rationals.
SimplexPoint random_simplex_point(int k, std::uint64_t seed, std::uint64_t index);

/// "(1/4, 1/2)" — for messages and reports.
std::string simplex_point_text(const SimplexPoint& pt);

/// "1/2,1/4,1/4" — masses in the CLI list format.
std::string masses_text(const MassVector& m);

}  // namespace renlab
