#include "frobalg/lazard.hpp"
#include "frobalg/suite.hpp"

#include <benchmark/benchmark.h>

using namespace frobalg;

static void BM_QuotientBuild(benchmark::State& state)
{
    const auto params = find_parameters(static_cast<unsigned>(state.range(0)), FieldMode::lazard);
    for (auto _ : state) benchmark::DoNotOptimize(QuotientAlgebra::build(params).total_dimension());
}
BENCHMARK(BM_QuotientBuild)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_GenerateBch(benchmark::State& state)
{
    const auto c = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generate_bch(c).terms.size());
}
BENCHMARK(BM_GenerateBch)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_GroupMultiply(benchmark::State& state)
{
    const auto q = std::make_shared<const QuotientAlgebra>(
        QuotientAlgebra::build(find_parameters(static_cast<unsigned>(state.range(0)), FieldMode::lazard)));
    const LazardGroup group(q);
    std::mt19937_64 rng(1);
    const GroupElement x{random_vector(*q, rng)}, y{random_vector(*q, rng)};
    for (auto _ : state) benchmark::DoNotOptimize(group.multiply(x, y));
}
BENCHMARK(BM_GroupMultiply)->Arg(5)->Arg(7)->Arg(11);

static void BM_LowerBoundSearch(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(search_min_prime(4, SearchMode::bound, 100));
}
BENCHMARK(BM_LowerBoundSearch);

BENCHMARK_MAIN();
