#include "renlab/polyfam.hpp"

#include <algorithm>

#include "renlab/errors.hpp"

namespace renlab {

namespace {

void check_family_args(int l, int k) {
  if (k < 2) throw Error("OutOfRange", "family arity k must be >= 2");
  if (l < 1) throw Error("OutOfRange", "family index l must be >= 1");
  if (k > kMaxVars || l > kMaxVars)
    throw Error("ArityMismatch",
                "composition form needs min(k, l) <= " + std::to_string(kMaxVars) +
                    " variables");
}

/// U_0..U_n in full variables p1..pk via the defining recurrence.
std::vector<MultiPoly> mass_poly_chain(int k, int n) {
  std::vector<MultiPoly> u;
  u.reserve(static_cast<std::size_t>(n) + 1);
  u.push_back(MultiPoly::constant(k, 1));
  for (int i = 1; i <= n; ++i) {
    MultiPoly acc(k);
    for (int j = 1; j <= std::min(i, k); ++j)
      acc = acc + MultiPoly::variable(k, j) * u[static_cast<std::size_t>(i - j)];
    u.push_back(acc);
  }
  return u;
}

/// Images rewriting p_k as 1 - (p1 + ... + p_{k-1}); identity elsewhere.
std::vector<MultiPoly> solve_last_mass(int k) {
  std::vector<MultiPoly> images;
  images.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k - 1; ++j) images.push_back(MultiPoly::variable(k - 1, j));
  MultiPoly last = MultiPoly::constant(k - 1, 1);
  for (int j = 1; j <= k - 1; ++j) last = last - MultiPoly::variable(k - 1, j);
  images.push_back(last);
  return images;
}

PolyFamilyEntry make_entry(int l, int k, const MultiPoly& full,
                           const std::vector<MultiPoly>& images) {
  PolyFamilyEntry entry;
  entry.l = l;
  entry.k = k;
  // A composition of l has no part exceeding l, so variables beyond
  // min(k, l) cannot occur.
  entry.composition_form = full.shrink_vars(std::min(k, l));
  entry.substituted = full.substitute(images);
  return entry;
}

}  // namespace

PolyFamilyEntry build_P(int l, int k) {
  check_family_args(l, k);
  auto chain = mass_poly_chain(k, l);
  return make_entry(l, k, chain.back(), solve_last_mass(k));
}

std::vector<PolyFamilyEntry> build_P_family(int k, int l_max) {
  check_family_args(l_max, k);
  auto chain = mass_poly_chain(k, l_max);
  auto images = solve_last_mass(k);
  std::vector<PolyFamilyEntry> family;
  family.reserve(static_cast<std::size_t>(l_max));
  for (int l = 1; l <= l_max; ++l)
    family.push_back(make_entry(l, k, chain[static_cast<std::size_t>(l)], images));
  return family;
}

MultiPoly build_Q(int n, int k) {
  if (k < 2) throw Error("OutOfRange", "family arity k must be >= 2");
  if (n < 1 || n > k)
    throw Error("OutOfRange", "product bound Q_n needs 1 <= n <= k, got n = " +
                                  std::to_string(n));
  MultiPoly q = MultiPoly::constant(k - 1, 1);
  MultiPoly partial(k - 1);
  for (int j = 1; j <= n - 1; ++j) {
    partial = partial + MultiPoly::variable(k - 1, j);
    q = q * partial;
  }
  return q;
}

MinPolyResult min_poly_value(int k, const SimplexPoint& point) {
  return min_poly_value(build_P_family(k, k - 1), point);
}

MinPolyResult min_poly_value(const std::vector<PolyFamilyEntry>& family,
                             const SimplexPoint& point) {
  if (family.empty()) throw Error("OutOfRange", "empty polynomial family");
  const int k = family[0].k;
  if (static_cast<int>(family.size()) < k - 1)
    throw Error("OutOfRange", "family must cover l = 1..k-1");
  MinPolyResult best;
  for (int l = 1; l <= k - 1; ++l) {
    const PolyFamilyEntry& entry = family[static_cast<std::size_t>(l - 1)];
    Rational v = entry.substituted.eval(point.q);
    if (l == 1 || v < best.value) {
      best.value = v;
      best.l = l;
    }
  }
  return best;
}

bool weighted_scaling_check(int l, int k, const Rational& s,
                            const std::vector<Rational>& values) {
  PolyFamilyEntry entry = build_P(l, k);
  const int nv = entry.composition_form.nvars();
  if (static_cast<int>(values.size()) != nv)
    throw Error("ArityMismatch", "expected " + std::to_string(nv) + " values, got " +
                                     std::to_string(values.size()));
  std::vector<Rational> scaledv;
  scaledv.reserve(values.size());
  for (int j = 1; j <= nv; ++j)
    scaledv.push_back(pow_rational(s, static_cast<unsigned long>(j)) *
                      values[static_cast<std::size_t>(j - 1)]);
  Rational lhs = entry.composition_form.eval(scaledv);
  Rational rhs = pow_rational(s, static_cast<unsigned long>(l)) *
                 entry.composition_form.eval(values);
  return lhs == rhs;
}

bool composition_weights_uniform(const MultiPoly& composition_form, int l) {
  for (const auto& [e, c] : composition_form.terms()) {
    long w = 0;
    for (int j = 0; j < composition_form.nvars(); ++j) w += static_cast<long>(j + 1) * e[j];
    if (w != l) return false;
  }
  return true;
}

std::vector<int> max_powers(const MultiPoly& poly) {
  std::vector<int> out(static_cast<std::size_t>(poly.nvars()));
  for (int j = 1; j <= poly.nvars(); ++j)
    out[static_cast<std::size_t>(j - 1)] = poly.max_exponent(j);
  return out;
}

MultiPoly hat_transform(const MultiPoly& poly, int k) {
  if (k < 2 || poly.nvars() != k - 1)
    throw Error("ArityMismatch", "hat transform needs a polynomial in k-1 = " +
                                     std::to_string(k - 1) + " variables");
  std::vector<MultiPoly> images;
  images.reserve(static_cast<std::size_t>(k - 1));
  images.push_back(MultiPoly::variable(k - 1, 1));
  for (int i = 2; i <= k - 1; ++i)
    images.push_back(MultiPoly::variable(k - 1, i) - MultiPoly::variable(k - 1, i - 1));
  return poly.substitute(images);
}

MultiPoly hat_slice(const MultiPoly& poly, int k, int j) {
  if (j < 1 || j > k - 1)
    throw Error("OutOfRange", "slice index must satisfy 1 <= j <= k-1");
  return hat_transform(poly, k).fix_trailing(j, Rational(1));
}

namespace {

ClassVerdict scan_value_bound(const MultiPoly& poly, int k, const SamplePlan& plan,
                              ClassVerdict verdict) {
  auto family = build_P_family(k, k - 1);
  for (const SimplexPoint& pt : sample_simplex(k, plan)) {
    ++verdict.points_checked;
    Rational lhs = poly.eval(pt.q);
    MinPolyResult bound = min_poly_value(family, pt);
    if (lhs > bound.value) {
      verdict.status = ClassVerdict::Status::CertifiedOut;
      verdict.reason = ClassVerdict::Reason::Value;
      verdict.witness = pt;
      verdict.lhs = lhs;
      verdict.rhs = bound.value;
      break;
    }
  }
  return verdict;
}

}  // namespace

ClassVerdict in_A_class(const MultiPoly& poly, int k, const SamplePlan& plan) {
  if (k < 2) throw Error("OutOfRange", "class arity k must be >= 2");
  if (poly.nvars() != k - 1)
    throw Error("ArityMismatch",
                "class test needs a polynomial in k-1 = " + std::to_string(k - 1) +
                    " variables");
  ClassVerdict verdict;
  if (poly.degree() > k - 1) {
    verdict.status = ClassVerdict::Status::CertifiedOut;
    verdict.reason = ClassVerdict::Reason::Degree;
    verdict.degree = poly.degree();
    return verdict;
  }
  return scan_value_bound(poly, k, plan, verdict);
}

ClassVerdict in_A_hat_class(const MultiPoly& poly, int k, const SamplePlan& plan) {
  if (k < 2) throw Error("OutOfRange", "class arity k must be >= 2");
  if (poly.nvars() != k - 1)
    throw Error("ArityMismatch",
                "class test needs a polynomial in k-1 = " + std::to_string(k - 1) +
                    " variables");
  for (int j = 1; j <= k - 1; ++j) {
    MultiPoly slice = hat_slice(poly, k, j);
    if (slice.degree() > j) {
      ClassVerdict verdict;
      verdict.status = ClassVerdict::Status::CertifiedOut;
      verdict.reason = ClassVerdict::Reason::HatSliceDegree;
      verdict.degree = slice.degree();
      verdict.slice_j = j;
      return verdict;
    }
  }
  return in_A_class(poly, k, plan);
}

}  // namespace renlab
