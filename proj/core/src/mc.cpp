#include "renlab/mc.hpp"

#include <cmath>
#include <mutex>

#include "renlab/errors.hpp"
#include "renlab/renewal.hpp"
#include "renlab/util.hpp"

namespace renlab {

McEstimate simulate(const MassVector& m, int n_max, std::uint64_t n_walks,
                    std::uint64_t seed, int jobs) {
  if (n_max < 1) throw Error("OutOfRange", "n_max must be >= 1");
  if (n_walks < 1) throw Error("OutOfRange", "n_walks must be >= 1");

  // Inverse-CDF sampling on the u64 lattice: a draw r selects the smallest l
  // with r < T_l, where T_l = ceil(C_l * 2^64) and C_l is the exact
  // cumulative mass. T_l can equal 2^64, so thresholds are held in 128 bits;
  // the comparison stays exact and the sampler bias is exactly the rounding
  // of C_l to the lattice (< 2^-64 per cut).
  const Integer two64 = Integer(1) << 64;
  std::vector<unsigned __int128> thresholds;  // l = 1..k-1; step k is the default
  Rational cumulative = 0;
  for (int l = 1; l <= m.k - 1; ++l) {
    cumulative += m.p[static_cast<std::size_t>(l - 1)];
    Integer num = cumulative.get_num() * two64;
    Integer t;
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), cumulative.get_den().get_mpz_t());
    unsigned __int128 t128 = (t >= two64)
                                 ? (static_cast<unsigned __int128>(1) << 64)
                                 : static_cast<unsigned __int128>(t.get_ui());
    thresholds.push_back(t128);
  }

  McEstimate est;
  est.masses = m;
  est.n_max = n_max;
  est.n_walks = n_walks;
  est.seed = seed;

  const std::size_t size = static_cast<std::size_t>(n_max) + 1;
  std::vector<std::uint64_t> total(size, 0);
  std::mutex merge_mutex;

  parallel_for(n_walks, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> local(size, 0);
    for (std::uint64_t w = begin; w < end; ++w) {
      SplitMix64 rng = stream_rng(seed, w);
      long pos = 0;
      while (true) {
        local[static_cast<std::size_t>(pos)] += 1;
        if (pos >= n_max) break;
        std::uint64_t r = rng.next();
        int step = m.k;
        for (std::size_t l = 0; l < thresholds.size(); ++l)
          if (static_cast<unsigned __int128>(r) < thresholds[l]) {
            step = static_cast<int>(l) + 1;
            break;
          }
        pos += step;
        if (pos > n_max) break;
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (std::size_t i = 0; i < size; ++i) total[i] += local[i];
  });

  est.u_hat.resize(size);
  est.stderr_.resize(size);
  const double nw = static_cast<double>(n_walks);
  for (std::size_t i = 0; i < size; ++i) {
    double p = static_cast<double>(total[i]) / nw;
    est.u_hat[i] = p;
    est.stderr_[i] = std::sqrt(p * (1.0 - p) / nw);
  }
  return est;
}

McCrossCheck cross_check(const MassVector& m, int n_max, std::uint64_t n_walks,
                         std::uint64_t seed, double z_threshold, int jobs) {
  McCrossCheck check;
  check.estimate = simulate(m, n_max, n_walks, seed, jobs);
  check.z_threshold = z_threshold;
  RenewalSeq seq = compute_renewal(m, n_max);
  check.pass = true;
  for (int n = 1; n <= n_max; ++n) {
    McRow row;
    row.n = n;
    row.u_exact = seq.u[static_cast<std::size_t>(n)];
    row.u_hat = check.estimate.u_hat[static_cast<std::size_t>(n)];
    row.se = check.estimate.stderr_[static_cast<std::size_t>(n)];
    if (row.se > 0.0)
      row.z = std::abs(row.u_hat - to_double(row.u_exact)) / row.se;
    check.rows.push_back(row);
    if (row.z > check.worst_z) {
      check.worst_z = row.z;
      check.worst_n = n;
    }
    if (row.se > 0.0 && row.z > z_threshold) check.pass = false;
  }
  return check;
}

}  // namespace renlab
