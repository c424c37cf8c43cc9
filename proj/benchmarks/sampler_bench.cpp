#include <benchmark/benchmark.h>

#include "unrel/exact.hpp"
#include "unrel/importance.hpp"
#include "unrel/monte_carlo.hpp"

namespace {

using namespace unrel;

// Per-sample cost of the importance sampler on cycles; the context is built
// once outside the timed loop.
void BM_ImportanceSampleCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const SamplerContext ctx = build_context(generate("cycle", {.n = n}), 1e-4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sample_once(ctx, rng));
  state.counters["n"] = n;
}
BENCHMARK(BM_ImportanceSampleCycle)->RangeMultiplier(2)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMicrosecond);

void BM_ImportanceContextCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MultiGraph g = generate("cycle", {.n = n});
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(build_context(g, 1e-4, rng).lambda);
}
BENCHMARK(BM_ImportanceContextCycle)->RangeMultiplier(4)->Range(1 << 6, 1 << 12)->Unit(benchmark::kMillisecond);

void BM_NaiveRound(benchmark::State& state) {
  const MultiGraph g = generate("gnm", {.n = static_cast<int>(state.range(0)), .m = 4 * static_cast<int>(state.range(0))});
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(naive_round(g, 0.2, rng));
}
BENCHMARK(BM_NaiveRound)->RangeMultiplier(4)->Range(64, 4096);

void BM_ExactU(benchmark::State& state) {
  const MultiGraph g = generate("cycle", {.n = static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(exact_u(g, 0.1));
}
BENCHMARK(BM_ExactU)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
