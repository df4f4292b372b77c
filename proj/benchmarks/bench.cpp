#include <benchmark/benchmark.h>

#include "blockreg/regularity.hpp"

using namespace blockreg;

namespace {

// Full Bott table sweep over a fixed twist range on P^n.
void BM_BottTable(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int p = 0; p <= n; ++p)
            for (int k = -12; k <= 12; ++k)
                benchmark::DoNotOptimize(bott_cohomology(FactorSheaf(n, p, k)));
}

void BM_KunnethCohomology(benchmark::State& state)
{
    Space space({2, 1});
    SplitSheaf f;
    f.add(2, BoxProduct({FactorSheaf(2, 1, 1), FactorSheaf(1, 0, 2)}));
    f.add(1, BoxProduct::line_bundle(space, MultiDegree({-3, 4})));
    f.add(3, BoxProduct::line_bundle(space, MultiDegree({2, -2})));
    for (auto _ : state)
        benchmark::DoNotOptimize(cohomology(space, f));
}

void BM_AlignedRegularitySearch(benchmark::State& state)
{
    Space space({1, 1});
    SplitSheaf f;
    f.add(1, BoxProduct::line_bundle(space, MultiDegree({-5, 3})));
    f.add(2, BoxProduct::line_bundle(space, MultiDegree({4, -4})));
    for (auto _ : state)
        benchmark::DoNotOptimize(block_regularity_aligned(space, f));
}

void BM_OriginEquivalence(benchmark::State& state)
{
    Space space({2, 1});
    SplitSheaf f;
    f.add(1, BoxProduct::line_bundle(space, MultiDegree({-2, 1})));
    f.add(2, BoxProduct::line_bundle(space, MultiDegree({0, -3})));
    for (auto _ : state)
        benchmark::DoNotOptimize(hw_block_equivalence(space, f));
}

} // namespace

BENCHMARK(BM_BottTable)->Arg(2)->Arg(4);
BENCHMARK(BM_KunnethCohomology);
BENCHMARK(BM_AlignedRegularitySearch);
BENCHMARK(BM_OriginEquivalence);

BENCHMARK_MAIN();
