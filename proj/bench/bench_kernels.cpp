// Serial reference vs OpenMP kernels. Argument 0 = serial, 1 = parallel.

#include "mpj/axioms.hpp"
#include "mpj/decomposition.hpp"
#include "mpj/generators.hpp"

#include <benchmark/benchmark.h>

using namespace mpj;

namespace {

GeneratedAlgebra sl2_power(int k)
{
    GeneratedAlgebra g = lie_sl2();
    for (int i = 1; i < k; ++i)
        g = direct_sum(g, lie_sl2());
    return g;
}

Exec mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_VerifyAxioms(benchmark::State& state)
{
    const auto g = direct_sum(sl2_power(2), malcev_m7());
    AxiomOptions opts;
    opts.exec = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_axioms(g.algebra, opts).all_pass());
    state.SetLabel("dim " + std::to_string(g.algebra.dim()));
}

void BM_Decompose(benchmark::State& state)
{
    const auto g = sl2_power(4);
    for (auto _ : state) {
        const ConnectionContext ctx(root_decomposition(g.algebra, g.masa), mode(state));
        benchmark::DoNotOptimize(decompose(ctx, mode(state)).components.size());
    }
    state.SetLabel("dim " + std::to_string(g.algebra.dim()));
}

void BM_Oracle(benchmark::State& state)
{
    const auto g = sl2_power(4);
    const auto rd = root_decomposition(g.algebra, g.masa);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_is_simple(rd, mode(state)));
    state.SetLabel("dim " + std::to_string(g.algebra.dim()));
}

} // namespace

BENCHMARK(BM_VerifyAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decompose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
