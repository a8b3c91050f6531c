#include "renlab/conjecture.hpp"

#include <algorithm>

#include "renlab/errors.hpp"
#include "renlab/lp.hpp"
#include "renlab/renewal.hpp"

namespace renlab {

RegionResult region_classify(int k, const SimplexPoint& point) {
  if (k < 3) throw Error("OutOfRange", "region structure needs k >= 3");
  if (point.k != k || point.q.size() != static_cast<std::size_t>(k - 1))
    throw Error("ArityMismatch", "point arity does not match k");
  auto family = build_P_family(k, k - 1);
  RegionResult res;
  res.values.reserve(static_cast<std::size_t>(k - 1));
  for (const auto& entry : family) res.values.push_back(entry.substituted.eval(point.q));
  res.l = 1;
  for (int l = 2; l <= k - 1; ++l)
    if (res.values[static_cast<std::size_t>(l - 1)] < res.values[static_cast<std::size_t>(res.l - 1)])
      res.l = l;
  const Rational& best = res.values[static_cast<std::size_t>(res.l - 1)];
  for (int l = 1; l <= k - 1; ++l)
    if (l != res.l && res.values[static_cast<std::size_t>(l - 1)] == best) {
      res.boundary = true;
      res.l = 0;
      break;
    }
  return res;
}

std::map<int, SimplexPoint> find_region_points(int k, const SamplePlan& plan) {
  std::map<int, SimplexPoint> reps;
  for_each_sample(k, plan, [&](const SimplexPoint& pt, std::uint64_t) {
    RegionResult res = region_classify(k, pt);
    if (!res.boundary && !reps.contains(res.l)) reps.emplace(res.l, pt);
  });
  return reps;
}

PerturbationCertificate build_perturbation(int k, const SimplexPoint& base,
                                           const SamplePlan& scan) {
  RegionResult reg = region_classify(k, base);
  if (reg.boundary)
    throw Error("BoundaryPoint",
                "base point lies on a region boundary; the perturbation needs a "
                "strict regional minimizer");

  auto family = build_P_family(k, k - 1);
  const MultiPoly& pl = family[static_cast<std::size_t>(reg.l - 1)].substituted;

  // |p - p0|^2 over the simplex coordinates.
  MultiPoly dist2(k - 1);
  for (int i = 1; i <= k - 1; ++i) {
    MultiPoly diff = MultiPoly::variable(k - 1, i) -
                     MultiPoly::constant(k - 1, base.q[static_cast<std::size_t>(i - 1)]);
    dist2 = dist2 + diff * diff;
  }

  std::vector<SimplexPoint> points = sample_simplex(k, scan);
  if (points.empty()) throw Error("OutOfRange", "perturbation scan plan is empty");

  // Per point: slack of P_l under the windowed minimum, and the quadratic.
  std::vector<Rational> slack, quad;
  slack.reserve(points.size());
  quad.reserve(points.size());
  for (const SimplexPoint& pt : points) {
    slack.push_back(min_poly_value(family, pt).value - pl.eval(pt.q));
    quad.push_back(dist2.eval(pt.q));
  }

  // margin(a) = min over points of slack + a * quad. Slack is <= 0 (the
  // polynomial sits above the windowed minimum off its own region) and quad
  // is >= 0, so the margin is non-decreasing in a: the search climbs a = 1,
  // 2, 4, ... until the compactness bound kicks in. On a grid with spacing
  // 1/r the smallest nonzero quad is at least 1/r^2 while slack is at least
  // -1, so a = r^2 always suffices and the budget below is never exhausted
  // for the resolutions in use.
  for (int step = 0; step <= 32; ++step) {
    Rational a(Integer(1) << step);
    Rational margin = slack[0] + a * quad[0];
    for (std::size_t i = 1; i < points.size(); ++i) {
      Rational v = slack[i] + a * quad[i];
      if (v < margin) margin = v;
    }
    if (margin >= 0) {
      PerturbationCertificate cert;
      cert.k = k;
      cert.l = reg.l;
      cert.base = base;
      cert.a = a;
      cert.margin = margin;
      cert.scan = scan;
      cert.points_checked = points.size();
      cert.perturbed = pl - dist2.scaled(a);
      return cert;
    }
  }
  throw Error("NoPositiveA",
              "no perturbation size in {1, 2, ..., 2^32} keeps the polynomial "
              "under the windowed minimum on the scan");
}

bool verify_certificate(const PerturbationCertificate& cert) {
  bool first = true;
  Rational margin;
  for (const SimplexPoint& pt : sample_simplex(cert.k, cert.scan)) {
    // Windowed minimum by the renewal recurrence — independent of the
    // polynomial-family route the builder used.
    Rational m = extremes(from_simplex_point(pt)).m;
    Rational diff = m - cert.perturbed.eval(pt.q);
    if (first || diff < margin) margin = diff;
    first = false;
  }
  return !first && margin == cert.margin && margin >= 0;
}

NoLargestReport no_largest_demo(int k, std::vector<SimplexPoint> points,
                                const SamplePlan& scan) {
  if (k < 3) throw Error("OutOfRange", "the demonstration needs k >= 3");
  if (points.empty()) {
    if (k == 3) {
      points.push_back(make_simplex_point(3, {make_rational(1, 4), make_rational(1, 2)}));
      points.push_back(make_simplex_point(3, {make_rational(3, 4), Rational(0)}));
    } else {
      for (auto& [l, pt] : find_region_points(k, SamplePlan::grid(2 * k)))
        points.push_back(pt);
    }
  }

  NoLargestReport report;
  report.k = k;
  report.scan = scan;
  std::vector<int> regions;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RegionResult reg = region_classify(k, points[i]);
    if (reg.boundary)
      throw Error("BoundaryPoint",
                  "demo point " + std::to_string(i + 1) + " lies on a region boundary");
    regions.push_back(reg.l);
  }
  std::vector<int> distinct = regions;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2)
    throw Error("RequiresTwoRegions",
                "all supplied points classify into region " +
                    (regions.empty() ? std::string("?") : std::to_string(regions[0])) +
                    "; the demonstration needs two distinct regions");
  report.regions = distinct;
  for (const SimplexPoint& pt : points)
    report.certificates.push_back(build_perturbation(k, pt, scan));
  return report;
}

K3MinCheck verify_k3_m3(const SamplePlan& plan) {
  K3MinCheck check;
  check.ok = true;
  for (const SimplexPoint& pt : sample_simplex(3, plan)) {
    ++check.checked;
    // Recurrence route (whatever arity the lifted law strips to) ...
    Rational recur = extremes(from_simplex_point(pt)).m;
    // ... against the closed form evaluated directly on coordinates.
    Rational formula = pt.q[0] * pt.q[0] + pt.q[1];
    if (pt.q[0] < formula) formula = pt.q[0];
    if (recur != formula) {
      check.ok = false;
      check.first_mismatch = pt;
      check.recurrence_value = recur;
      check.formula_value = formula;
      break;
    }
  }
  return check;
}

K3HatConstraintReport verify_k3_hat_constraint() {
  // Variables 1..8 = p1, p2, a, b, c, d, e, f: a generic quadratic with
  // symbolic coefficients.
  auto var = [](int i) { return MultiPoly::variable(8, i); };
  MultiPoly P = var(3) * var(1) * var(1) + var(4) * var(1) * var(2) +
                var(5) * var(2) * var(2) + var(6) * var(1) + var(7) * var(2) + var(8);

  // Substitute p2 -> 1 - p1, leaving the coefficients symbolic.
  std::vector<MultiPoly> images;
  images.push_back(var(1));
  images.push_back(MultiPoly::constant(8, 1) - var(1));
  for (int i = 3; i <= 8; ++i) images.push_back(var(i));
  MultiPoly S = P.substitute(images);

  // Coefficient of p1^2, remapped to variables a..f.
  MultiPoly coeff(6);
  for (const auto& [e, c] : S.terms()) {
    if (e[0] != 2) continue;
    Exponents r{};
    for (int i = 2; i < 8; ++i) r[i - 2] = e[i];
    coeff.add_term(r, c);
  }

  K3HatConstraintReport report;
  report.p1sq_coefficient = coeff;
  report.coeff_names = {"a", "b", "c", "d", "e", "f"};
  MultiPoly expected = MultiPoly::variable(6, 1) - MultiPoly::variable(6, 2) +
                       MultiPoly::variable(6, 3);  // a - b + c
  report.constraint_matches = (coeff == expected);

  // Under b = a + c: 4(a-1)c - (b-1)^2 == -(a-c-1)^2 in (a, c).
  MultiPoly A = MultiPoly::variable(2, 1), C = MultiPoly::variable(2, 2);
  MultiPoly one = MultiPoly::constant(2, 1);
  MultiPoly B = A + C;
  report.det_lhs = ((A - one) * C).scaled(4) - (B - one) * (B - one);
  report.det_rhs = -((A - C - one) * (A - C - one));
  report.det_names = {"a", "c"};
  report.identity_holds = (report.det_lhs == report.det_rhs);
  return report;
}

std::string class_kind_name(ClassKind kind) {
  return kind == ClassKind::Window ? "a" : "a-hat";
}

namespace {

/// All exponent tuples in `nvars` variables of total degree <= cap, in
/// canonical term order.
std::vector<Exponents> degree_capped_basis(int nvars, int cap) {
  std::vector<Exponents> out;
  Exponents cur{};
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(pos)] = static_cast<std::uint16_t>(v);
      self(self, pos + 1, remaining - v);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, cap);
  std::sort(out.begin(), out.end(), GrlexDesc{});
  return out;
}

/// Exact null-space basis of E (rows x n), returned as n x dim columns.
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> R,
                                              std::size_t n) {
  std::vector<std::size_t> pivot_rows, pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < R.size(); ++col) {
    std::size_t pr = row;
    while (pr < R.size() && R[pr][col] == 0) ++pr;
    if (pr == R.size()) continue;
    std::swap(R[row], R[pr]);
    Rational inv = 1 / R[row][col];
    for (std::size_t j = col; j < n; ++j) R[row][j] *= inv;
    for (std::size_t rr = 0; rr < R.size(); ++rr) {
      if (rr == row || R[rr][col] == 0) continue;
      Rational f = R[rr][col];
      for (std::size_t j = col; j < n; ++j) R[rr][j] -= f * R[row][j];
    }
    pivot_rows.push_back(row);
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::size_t dim = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) ++dim;
  std::vector<std::vector<Rational>> N(n);
  for (auto& r : N) r.assign(dim, Rational(0));
  std::size_t col_out = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    N[f][col_out] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      N[pivot_cols[i]][col_out] = -R[pivot_rows[i]][f];
    ++col_out;
  }
  return N;
}

}  // namespace

DominanceProbe dominance_search(int k, ClassKind kind, int grid_r, double tol) {
  if (k < 2) throw Error("OutOfRange", "dominance probe needs k >= 2");
  if (grid_r < 1) throw Error("ResolutionZero", "grid resolution must be >= 1");

  DominanceProbe probe;
  probe.k = k;
  probe.class_kind = kind;
  probe.grid_r = grid_r;
  probe.tol = tol;

  // Candidate space: polynomials of total degree <= k-1 (the class degree
  // cap), coefficients indexed by canonical monomial order.
  const int nv = k - 1;
  std::vector<Exponents> basis = degree_capped_basis(nv, k - 1);
  const std::size_t n = basis.size();
  probe.basis_size = static_cast<int>(n);
  std::map<Exponents, std::size_t, GrlexDesc> basis_index;
  for (std::size_t i = 0; i < n; ++i) basis_index.emplace(basis[i], i);

  probe.q_poly = build_Q(k, k);
  std::vector<Rational> xq(n, Rational(0));
  for (const auto& [e, c] : probe.q_poly.terms()) xq[basis_index.at(e)] = c;

  // Linear class constraints: for the refined class, every hat-slice monomial
  // of degree above its slice cap must cancel.
  std::vector<std::vector<Rational>> E;
  if (kind == ClassKind::Hat) {
    for (int j = 1; j <= k - 1; ++j) {
      std::map<Exponents, std::vector<Rational>, GrlexDesc> rows;
      for (std::size_t i = 0; i < n; ++i) {
        MultiPoly slice =
            hat_slice(MultiPoly::monomial(nv, basis[i], Rational(1)), k, j);
        for (const auto& [e, c] : slice.terms()) {
          if (total_degree(e) <= j) continue;
          auto [it, fresh] = rows.try_emplace(e);
          if (fresh) it->second.assign(n, Rational(0));
          it->second[i] = c;
        }
      }
      for (auto& [e, rowvec] : rows) E.push_back(std::move(rowvec));
    }
    // Q_k must satisfy its own class constraints exactly.
    for (const auto& rowvec : E) {
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += rowvec[i] * xq[i];
      if (acc != 0)
        throw Error("LPInfeasible",
                    "class constraint rows reject the product bound itself; "
                    "constraint assembly is inconsistent");
    }
  }

  // Eliminate the constraints exactly: candidate = Q_k + N z with z free.
  std::vector<std::vector<Rational>> N;
  if (E.empty()) {
    N.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      N[i].assign(n, Rational(0));
      N[i][i] = 1;
    }
  } else {
    N = null_space(E, n);
  }
  const std::size_t dim = N.empty() ? 0 : N[0].size();
  probe.null_dim = static_cast<int>(dim);

  // Grid sweep: monomial row mu(g), windowed-min slack d(g) = m - Q_k >= 0.
  auto family = build_P_family(k, k - 1);
  std::vector<SimplexPoint> points = sample_simplex(k, SamplePlan::grid(grid_r));

  LpProblem lp;
  lp.nvars = static_cast<int>(dim);
  lp.objective.assign(dim, 0.0);
  lp.rows.reserve(2 * points.size());
  lp.rhs.reserve(2 * points.size());
  for (const SimplexPoint& g : points) {
    // mu_i = value of basis monomial i at g, via coordinate power ladders.
    std::vector<std::vector<Rational>> ladder(static_cast<std::size_t>(nv));
    auto coord_pow = [&](int v, int e) -> const Rational& {
      auto& l = ladder[static_cast<std::size_t>(v)];
      if (l.empty()) l.push_back(Rational(1));
      while (static_cast<int>(l.size()) <= e)
        l.push_back(l.back() * g.q[static_cast<std::size_t>(v)]);
      return l[static_cast<std::size_t>(e)];
    };
    std::vector<Rational> mu(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i)
      for (int v = 0; v < nv; ++v)
        if (basis[i][static_cast<std::size_t>(v)] != 0)
          mu[i] *= coord_pow(v, basis[i][static_cast<std::size_t>(v)]);

    Rational d = min_poly_value(family, g).value - probe.q_poly.eval(g.q);
    if (d < 0)
      throw Error("LPInfeasible",
                  "product bound exceeds the windowed minimum at " +
                      simplex_point_text(g) + "; the lower-bound chain is broken");

    std::vector<double> muN(dim, 0.0);
    bool nonzero = false;
    for (std::size_t z = 0; z < dim; ++z) {
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mu[i] != 0 && N[i][z] != 0) acc += mu[i] * N[i][z];
      muN[z] = to_double(acc);
      if (muN[z] != 0.0) nonzero = true;
    }
    if (!nonzero) continue;  // candidate value pinned at this point

    for (std::size_t z = 0; z < dim; ++z) lp.objective[z] += muN[z];
    lp.rows.push_back(muN);
    lp.rhs.push_back(to_double(d));
    std::vector<double> neg(dim);
    for (std::size_t z = 0; z < dim; ++z) neg[z] = -muN[z];
    lp.rows.push_back(std::move(neg));
    lp.rhs.push_back(0.0);
  }

  LpResult lpres = solve_lp(lp);
  if (lpres.status == LpResult::Status::Unbounded)
    throw Error("LPUnbounded",
                "improvement direction is unbounded; a class or grid constraint "
                "is missing");
  probe.objective = lpres.objective;
  probe.lp_iterations = lpres.iterations;

  // Exact candidate: doubles are dyadic, so this reconstruction is exact and
  // the linear class constraints hold exactly by construction.
  std::vector<Rational> x = xq;
  for (std::size_t z = 0; z < dim; ++z) {
    if (lpres.x[z] == 0.0) continue;
    Rational zr = rational_from_double(lpres.x[z]);
    for (std::size_t i = 0; i < n; ++i)
      if (N[i][z] != 0) x[i] += N[i][z] * zr;
  }
  probe.candidate = MultiPoly(nv);
  for (std::size_t i = 0; i < n; ++i) probe.candidate.add_term(basis[i], x[i]);

  // Refined exact recheck.
  probe.recheck.grid_r = 2 * grid_r;
  probe.recheck.distinct = !(probe.candidate == probe.q_poly);
  for (const SimplexPoint& g : sample_simplex(k, SamplePlan::grid(2 * grid_r))) {
    Rational cand = probe.candidate.eval(g.q);
    if (cand > min_poly_value(family, g).value) {
      probe.recheck.in_class = false;
      probe.recheck.witness = g;
      break;
    }
    if (cand < probe.q_poly.eval(g.q)) {
      probe.recheck.dominates = false;
      probe.recheck.witness = g;
      break;
    }
  }
  probe.anomalous = probe.objective > probe.tol && probe.recheck.in_class &&
                    probe.recheck.dominates && probe.recheck.distinct;
  return probe;
}

}  // namespace renlab
