#include <benchmark/benchmark.h>

#include "omdnet/patterns.hpp"

using namespace omdnet;

namespace {

void EnumeratePatterns222(benchmark::State& state) {
    const Params pr(2, 2, 2);
    for (auto _ : state) {
        auto family = enumerate_patterns(pr);
        benchmark::DoNotOptimize(family);
    }
}
BENCHMARK(EnumeratePatterns222);

void EnumeratePatterns312(benchmark::State& state) {
    const Params pr(3, 1, 2);
    for (auto _ : state) {
        auto family = enumerate_patterns(pr);
        benchmark::DoNotOptimize(family);
    }
}
BENCHMARK(EnumeratePatterns312);

void EnumeratePatterns232(benchmark::State& state) {
    const Params pr(2, 3, 2);  // 4096 patterns
    for (auto _ : state) {
        auto family = enumerate_patterns(pr);
        benchmark::DoNotOptimize(family);
    }
}
BENCHMARK(EnumeratePatterns232);

void Census222(benchmark::State& state) {
    const auto family = enumerate_patterns(Params(2, 2, 2));
    for (auto _ : state) {
        auto census = overlap_census(family);
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(Census222);

void StripRoundTrip(benchmark::State& state) {
    const auto family = enumerate_patterns(Params(2, 2, 2));
    for (auto _ : state) {
        for (const Pattern& pat : family) {
            auto back = compose_strips(decompose_strips(pat));
            benchmark::DoNotOptimize(back);
        }
    }
}
BENCHMARK(StripRoundTrip);

}  // namespace
