#include <benchmark/benchmark.h>

#include "omdnet/probability.hpp"

using namespace omdnet;

namespace {

void OccupancySmall(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(occupancy_exact(16, 4, state.range(0)));
}
BENCHMARK(OccupancySmall)->Arg(16)->Arg(64)->Arg(256);

void OccupancyWide(benchmark::State& state) {
    // k > 64 takes the log-domain path; N is large enough to avoid cancellation
    for (auto _ : state)
        benchmark::DoNotOptimize(occupancy_exact(4096, 256, 65536));
}
BENCHMARK(OccupancyWide);

void OccupancyRationalFallback(benchmark::State& state) {
    // tiny probability, heavy cancellation: exercises the exact rational path
    for (auto _ : state)
        benchmark::DoNotOptimize(occupancy_exact(4096, 64, 1024));
}
BENCHMARK(OccupancyRationalFallback);

void Sandwich(benchmark::State& state) {
    const Params pr(2, 2, 2, 32);
    for (auto _ : state)
        benchmark::DoNotOptimize(containment_sandwich(pr));
}
BENCHMARK(Sandwich);

void ContainmentExact213(benchmark::State& state) {
    const Params pr(2, 1, 3, 16);
    for (auto _ : state)
        benchmark::DoNotOptimize(containment_exact(pr));
}
BENCHMARK(ContainmentExact213);

}  // namespace
