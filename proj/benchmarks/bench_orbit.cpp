#include <benchmark/benchmark.h>

#include "ietk/rauzy.hpp"
#include "ietk/sampling.hpp"

using namespace ietk;

namespace {

Iet bench_iet() { return sample_random_iet(4, 99991, std::uint64_t{17}); }

void BM_FastOrbit(benchmark::State& state) {
  Iet t = bench_iet();
  auto orbit = *FastOrbit::create(t, ExactNumber::rational(1, 7));
  for (auto _ : state) {
    orbit.step();
    benchmark::DoNotOptimize(orbit.position_num());
  }
}
BENCHMARK(BM_FastOrbit);

void BM_ExactApply(benchmark::State& state) {
  Iet t = bench_iet();
  ExactNumber p = ExactNumber::rational(1, 7);
  for (auto _ : state) {
    p = t.apply(p);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_ExactApply);

void BM_RvPath(benchmark::State& state) {
  Iet t = sample_random_iet(5, 1000003, std::uint64_t{23});
  for (auto _ : state) {
    benchmark::DoNotOptimize(rv_path(t, state.range(0)));
  }
}
BENCHMARK(BM_RvPath)->Arg(5)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
