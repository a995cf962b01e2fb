#include <dodeca/chroma.hpp>
#include <dodeca/compound.hpp>
#include <dodeca/symmetry.hpp>

#include <benchmark/benchmark.h>

using namespace dodeca;

static void BM_BuildPolytope(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(build_polytope());
}
BENCHMARK(BM_BuildPolytope);

static void BM_EnumerateAll(benchmark::State& state)
{
    const auto& model = canonical_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_all(model));
}
BENCHMARK(BM_EnumerateAll)->Unit(benchmark::kMillisecond);

static void BM_ProofEnumeration(benchmark::State& state)
{
    const auto& model = canonical_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(propagate_proof_enumeration(model));
}
BENCHMARK(BM_ProofEnumeration)->Unit(benchmark::kMillisecond);

static void BM_RotationGroup(benchmark::State& state)
{
    const auto& model = canonical_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(rotation_group(model));
}
BENCHMARK(BM_RotationGroup);

static void BM_OrbitPartitionFullGroup(benchmark::State& state)
{
    const auto& model = canonical_model();
    const auto all = enumerate_all(model);
    const auto G = colour_group();
    for (auto _ : state)
        benchmark::DoNotOptimize(orbit_partition(all, G, model));
}
BENCHMARK(BM_OrbitPartitionFullGroup)->Unit(benchmark::kMillisecond);

static void BM_SpreadSubsets(benchmark::State& state)
{
    const auto& model = canonical_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(spread_subsets(model));
}
BENCHMARK(BM_SpreadSubsets)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
