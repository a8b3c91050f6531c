#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace renlab {

/// splitmix64: tiny, fast, high-quality 64-bit generator. Used everywhere a
/// seeded stream is needed; streams are derived per (seed, index) so results
/// never depend on how work is partitioned across threads.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, 2^32).
  std::uint32_t next_u32() { return static_cast<std::uint32_t>(next() >> 32); }
};

/// Independent stream for item `index` under master `seed`.
inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64{seed + 0x9e3779b97f4a7c15ULL * (index + 1)};
}

/// Worker count: explicit request > RENEWAL_LAB_JOBS > hardware concurrency.
inline int resolve_jobs(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RENEWAL_LAB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(begin, end) over [0, total) split into contiguous chunks, one per
/// worker. fn must only touch per-index state; chunking must not affect
/// results. Runs inline when a single worker suffices.
inline void parallel_for(std::uint64_t total, int jobs,
                         const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  jobs = resolve_jobs(jobs);
  if (total == 0) return;
  if (jobs <= 1 || total < 2) {
    fn(0, total);
    return;
  }
  std::uint64_t workers = std::min<std::uint64_t>(jobs, total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::uint64_t chunk = total / workers, rem = total % workers, begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    std::uint64_t len = chunk + (w < rem ? 1 : 0);
    pool.emplace_back(fn, begin, begin + len);
    begin += len;
  }
  for (auto& t : pool) t.join();
}

/// Exact binomial coefficient for the small arguments used by grid sizing.
inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace renlab
