#include <benchmark/benchmark.h>

#include "specht/carry_lattice.hpp"
#include "specht/criteria.hpp"
#include "specht/fp_oracle.hpp"
#include "specht/weights.hpp"

using namespace specht;

static void BM_EnumeratePartitions(benchmark::State& state)
{
    const auto d = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_partitions(d));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(40)->Arg(60);

static void BM_CarryPoset(benchmark::State& state)
{
    const auto d = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(carry_poset(d, d, Prime(3)));
}
BENCHMARK(BM_CarryPoset)->Arg(8)->Arg(12)->Arg(15);

static void BM_SubmoduleLattice(benchmark::State& state)
{
    const auto d = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(submodule_lattice(d, d, Prime(3)));
}
BENCHMARK(BM_SubmoduleLattice)->Arg(8)->Arg(12)->Arg(15);

static void BM_Freudenthal(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Weight kappa = rho_multiple(4, n);
    for (auto _ : state) {
        FreudenthalCalculator calc(kappa);
        benchmark::DoNotOptimize(calc.multiplicity(Weight(std::vector<std::int64_t>(n, 0))));
    }
}
BENCHMARK(BM_Freudenthal)->Arg(2)->Arg(3)->Arg(4);

static void BM_BuildSpecht(benchmark::State& state)
{
    const auto a = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_specht_rep({a, a}, Prime(3)));
}
BENCHMARK(BM_BuildSpecht)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_H1Dim(benchmark::State& state)
{
    const auto a = static_cast<std::uint64_t>(state.range(0));
    const auto rep = build_specht_rep({a, a}, Prime(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(h1_dim(rep));
}
BENCHMARK(BM_H1Dim)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_PsiSweep(benchmark::State& state)
{
    const auto d = static_cast<std::uint64_t>(state.range(0));
    const auto parts = enumerate_two_part(d);
    for (auto _ : state) {
        int total = 0;
        for (const auto& l : parts)
            total += h1_twopart_psi(l[0], l[1], Prime(3));
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_PsiSweep)->Arg(100)->Arg(300);
BENCHMARK_MAIN();
