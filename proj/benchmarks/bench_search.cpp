#include <benchmark/benchmark.h>

#include "omdnet/constructions.hpp"
#include "omdnet/experiments.hpp"
#include "omdnet/search.hpp"

using namespace omdnet;

namespace {

PointSet instance(const Params& pr, std::uint64_t seed, std::uint64_t n) {
    return sample_uniform(pr, seed, n);
}

void FindEnumerate(benchmark::State& state) {
    const Params pr(2, 2, 2);
    const PointSet ps = instance(pr, 17, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_net_subset(ps, pr, SearchStrategy::enumerate));
}
BENCHMARK(FindEnumerate)->Arg(16)->Arg(32)->Arg(64);

void FindBacktrack(benchmark::State& state) {
    const Params pr(2, 2, 2);
    const PointSet ps = instance(pr, 17, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_net_subset(ps, pr, SearchStrategy::backtrack));
}
BENCHMARK(FindBacktrack)->Arg(16)->Arg(32)->Arg(64);

void FindBacktrackDeep(benchmark::State& state) {
    const Params pr(2, 3, 2);  // past the enumeration sweet spot
    const PointSet ps = instance(pr, 23, 96);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_net_subset(ps, pr, SearchStrategy::backtrack));
}
BENCHMARK(FindBacktrackDeep);

void EstimateContainment(benchmark::State& state) {
    const Params pr(2, 1, 2, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            estimate_containment(pr, static_cast<std::uint64_t>(state.range(0)), 42));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(EstimateContainment)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
