#pragma once

// Test-side oracles, deliberately implemented with different algorithms than
// the library so agreement is meaningful.

#include <vector>

#include "renlab/masses.hpp"
#include "renlab/rational.hpp"

namespace testor {

/// Renewal mass by exhaustive enumeration of compositions as cut sets: a
/// composition of n with parts <= k is a subset of cut positions 1..n-1 with
/// every gap at most k. Sums the product of part masses over all 2^(n-1)
/// candidate masks. Practical for n <= ~20.
inline renlab::Rational oracle_u(const renlab::MassVector& m, int n) {
  using renlab::Rational;
  if (n == 0) return Rational(1);
  Rational total = 0;
  const unsigned long mask_count = 1UL << (n - 1);
  for (unsigned long mask = 0; mask < mask_count; ++mask) {
    Rational prod = 1;
    int prev = 0;
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
      bool cut = (i == n) || (((mask >> (i - 1)) & 1UL) != 0);
      if (!cut) continue;
      int part = i - prev;
      if (part > m.k) {
        ok = false;
        break;
      }
      prod *= m.p[static_cast<std::size_t>(part - 1)];
      prev = i;
    }
    if (ok) total += prod;
  }
  return total;
}

}  // namespace testor
