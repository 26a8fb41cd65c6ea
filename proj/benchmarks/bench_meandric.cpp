#include <benchmark/benchmark.h>

#include "meandric/arch.hpp"
#include "meandric/factor.hpp"
#include "meandric/gauss.hpp"
#include "meandric/meander.hpp"
#include "meandric/numbers.hpp"

using namespace meandric;

namespace {

void BM_EnumeratePlanar(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_planar(n, [&](const std::vector<int>& images) {
            benchmark::DoNotOptimize(images.data());
            ++count;
        });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(planar_count_u64(n)));
}
BENCHMARK(BM_EnumeratePlanar)->Arg(8)->Arg(10)->Arg(12);

void BM_ExpectationBrute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Permutation sigma = shift(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation_leading_single(sigma));
    }
}
BENCHMARK(BM_ExpectationBrute)->Arg(8)->Arg(10)->Arg(12);

void BM_ExpectationFactorized(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    // Alternating adjacent transpositions: many small blocks to factor.
    std::vector<int> images;
    for (int i = 1; i + 1 <= n; i += 2) {
        images.push_back(i + 1);
        images.push_back(i);
    }
    if (n % 2 == 1) images.push_back(n);
    const Permutation sigma(images);
    for (auto _ : state) {
        SifCache cache;
        benchmark::DoNotOptimize(evaluate(sigma, cache));
    }
}
BENCHMARK(BM_ExpectationFactorized)->Arg(12)->Arg(24)->Arg(48);

void BM_ComponentCensus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_by_components(n));
    }
}
BENCHMARK(BM_ComponentCensus)->Arg(5)->Arg(6);

void BM_TwoReducible(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<MeandricSystem> systems;
    for_each_system(n, [&](const MeandricSystem& s) { systems.push_back(s); });
    for (auto _ : state) {
        int reducible = 0;
        for (const MeandricSystem& s : systems) reducible += is_two_reducible(s) ? 1 : 0;
        benchmark::DoNotOptimize(reducible);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(systems.size()));
}
BENCHMARK(BM_TwoReducible)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
