#include <benchmark/benchmark.h>

#include "renlab/conjecture.hpp"
#include "renlab/corpus.hpp"
#include "renlab/mc.hpp"
#include "renlab/polyfam.hpp"
#include "renlab/renewal.hpp"

using namespace renlab;

namespace {

void BM_RenewalRecurrence(benchmark::State& state) {
  MassVector m = floored_mass(static_cast<int>(state.range(0)), 42, 0);
  const int n_max = static_cast<int>(state.range(1));
  for (auto _ : state) {
    RenewalSeq seq = compute_renewal(m, n_max);
    benchmark::DoNotOptimize(seq.u.back());
  }
}
BENCHMARK(BM_RenewalRecurrence)->Args({3, 64})->Args({6, 256})->Args({6, 512});

void BM_EnvelopeSweep(benchmark::State& state) {
  MassVector m = floored_mass(5, 7, 3);
  RenewalSeq seq = compute_renewal(m, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Envelopes env = envelopes(seq);
    benchmark::DoNotOptimize(env.b.back());
  }
}
BENCHMARK(BM_EnvelopeSweep)->Arg(100)->Arg(400);

void BM_MassPolynomialFamily(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int l_max = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto family = build_P_family(k, l_max);
    benchmark::DoNotOptimize(family.back().substituted.term_count());
  }
}
BENCHMARK(BM_MassPolynomialFamily)->Args({4, 6})->Args({5, 8});

void BM_PolyMultiply(benchmark::State& state) {
  MultiPoly f = build_P(static_cast<int>(state.range(0)), 5).substituted;
  for (auto _ : state) {
    MultiPoly g = f * f;
    benchmark::DoNotOptimize(g.term_count());
  }
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(6);

void BM_GridSweepEval(benchmark::State& state) {
  MultiPoly q = build_Q(4, 4);
  SamplePlan plan = SamplePlan::grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rational acc = 0;
    for_each_sample(4, plan, [&](const SimplexPoint& pt, std::uint64_t) {
      acc += q.eval(pt.q);
    });
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_GridSweepEval)->Arg(8)->Arg(16);

void BM_DominanceProbe(benchmark::State& state) {
  for (auto _ : state) {
    DominanceProbe probe = dominance_search(3, ClassKind::Hat,
                                            static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(probe.objective);
  }
}
BENCHMARK(BM_DominanceProbe)->Arg(8)->Arg(16);

void BM_PerturbationCertificate(benchmark::State& state) {
  SimplexPoint base = make_simplex_point(
      3, {make_rational(1, 4), make_rational(1, 2)});
  SamplePlan scan = SamplePlan::grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PerturbationCertificate cert = build_perturbation(3, base, scan);
    benchmark::DoNotOptimize(cert.margin);
  }
}
BENCHMARK(BM_PerturbationCertificate)->Arg(16)->Arg(32);

void BM_MonteCarlo(benchmark::State& state) {
  MassVector m = parse_masses("1/2,1/4,1/4");
  const auto walks = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    McEstimate est = simulate(m, 20, walks, 1, 1);
    benchmark::DoNotOptimize(est.u_hat.back());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(50000);

}  // namespace

BENCHMARK_MAIN();
