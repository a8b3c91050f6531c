#include "renlab/renewal.hpp"

#include <algorithm>

#include "renlab/errors.hpp"

namespace renlab {

RenewalSeq compute_renewal(const MassVector& m, int n_max) {
  if (n_max < 0) throw Error("OutOfRange", "n_max must be >= 0");
  RenewalSeq seq;
  seq.masses = m;
  seq.n_max = n_max;
  seq.u.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.u.push_back(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational acc = 0;
    int span = std::min(n, m.k);
    for (int l = 1; l <= span; ++l) acc += m.p[l - 1] * seq.u[n - l];
    seq.u.push_back(acc);
  }
  return seq;
}

bool verify_recurrence(const RenewalSeq& seq) {
  // Walk the identity backwards with an independent accumulation order.
  if (seq.u.size() != static_cast<std::size_t>(seq.n_max) + 1) return false;
  if (seq.u.empty() || seq.u[0] != 1) return false;
  const MassVector& m = seq.masses;
  for (int n = seq.n_max; n >= 1; --n) {
    Rational acc = 0;
    for (int l = std::min(n, m.k); l >= 1; --l) acc += m.p[l - 1] * seq.u[n - l];
    if (acc != seq.u[n]) return false;
  }
  return true;
}

ExtremesReport extremes(const MassVector& m) {
  return extremes_of(compute_renewal(m, m.k));
}

ExtremesReport extremes_of(const RenewalSeq& seq) {
  const int k = seq.masses.k;
  if (seq.n_max < k) throw Error("HorizonTooShort", "need u_1..u_k to take extremes");
  ExtremesReport rep;
  rep.degenerate = (k == 1);
  rep.M = seq.u[1];
  rep.argmax = 1;
  for (int n = 2; n <= k; ++n)
    if (seq.u[n] > rep.M) {
      rep.M = seq.u[n];
      rep.argmax = n;
    }
  // min over u_1..u_{k-1}; for k = 1 it degenerates to u_1.
  int stop = std::max(1, k - 1);
  rep.m = seq.u[1];
  rep.argmin = 1;
  for (int n = 2; n <= stop; ++n)
    if (seq.u[n] < rep.m) {
      rep.m = seq.u[n];
      rep.argmin = n;
    }
  return rep;
}

WindowCheck verify_extremes_window(const MassVector& m, int horizon) {
  for (int l = 1; l <= m.k; ++l)
    if (m.p[l - 1] == 1)
      throw Error("DegenerateLaw",
                  "p_" + std::to_string(l) + " = 1: single-step law excluded");
  if (horizon <= m.k)
    throw Error("HorizonTooShort", "horizon must exceed k = " + std::to_string(m.k));

  RenewalSeq seq = compute_renewal(m, horizon);
  ExtremesReport ext = extremes_of(seq);
  WindowCheck chk;
  chk.horizon = horizon;
  chk.aperiodic = (period(m) == 1);
  chk.max_ok = true;
  for (int n = m.k + 1; n <= horizon; ++n)
    if (!(seq.u[n] < ext.M)) {
      chk.max_ok = false;
      chk.first_max_violation = n;
      break;
    }
  // The strict lower bound holds for aperiodic laws with p_1 > 0 (p_1 = 0
  // makes m = 0 attainable beyond the window).
  chk.min_checked = chk.aperiodic && m.k >= 2 && m.p[0] > 0;
  if (chk.min_checked) {
    chk.min_ok = true;
    for (int n = m.k; n <= horizon; ++n)
      if (!(seq.u[n] > ext.m)) {
        chk.min_ok = false;
        chk.first_min_violation = n;
        break;
      }
  }
  return chk;
}

Envelopes envelopes(const RenewalSeq& seq) {
  const int k = seq.masses.k;
  if (seq.n_max < k)
    throw Error("HorizonTooShort",
                "need n_max >= k = " + std::to_string(k) + " to form envelopes");
  Envelopes env;
  env.start = k;
  for (int n = k; n <= seq.n_max; ++n) {
    Rational hi = seq.u[n - 1], lo = seq.u[n - 1];
    for (int l = 2; l <= k; ++l) {
      const Rational& v = seq.u[n - l];
      if (v > hi) hi = v;
      if (v < lo) lo = v;
    }
    env.b.push_back(hi);
    env.c.push_back(lo);
  }
  return env;
}

Rational blackwell_limit(const MassVector& m) {
  int d = period(m);
  if (d != 1)
    throw Error("PeriodicWalk",
                "support has period " + std::to_string(d) + "; no single limit");
  return 1 / m.mean();
}

ConvergenceProfile convergence_profile(const MassVector& m, int n_max,
                                       const Rational& threshold) {
  ConvergenceProfile prof;
  prof.limit = blackwell_limit(m);
  RenewalSeq seq = compute_renewal(m, n_max);
  prof.gaps.reserve(seq.u.size());
  for (const Rational& v : seq.u) prof.gaps.push_back(abs_rational(v - prof.limit));
  prof.converged = !prof.gaps.empty() && prof.gaps.back() < threshold;
  return prof;
}

}  // namespace renlab
