#include <benchmark/benchmark.h>

#include <mocbandit/pareto.hpp>

#include <random>

using namespace mocbandit;

namespace {

ExpectedRewards instance(std::size_t k)
{
    std::mt19937_64 rng(k);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ExpectedRewards mu(k);
    for (auto& r : mu)
        r = {u(rng), u(rng)};
    return mu;
}

void BM_ParetoFront(benchmark::State& state)
{
    const ExpectedRewards mu = instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pareto_front(mu));
    state.SetComplexityN(state.range(0));
}

void BM_PsgAllArms(benchmark::State& state)
{
    const ExpectedRewards mu = instance(static_cast<std::size_t>(state.range(0)));
    const auto front = pareto_front(mu);
    for (auto _ : state) {
        double sum = 0.0;
        for (ArmId a = 0; a < mu.size(); ++a)
            sum += psg(a, mu, front);
        benchmark::DoNotOptimize(sum);
    }
}

void BM_LexOptimal(benchmark::State& state)
{
    const ExpectedRewards mu = instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(lex_optimal(mu));
}

} // namespace

BENCHMARK(BM_ParetoFront)->RangeMultiplier(4)->Range(4, 1024)->Complexity();
BENCHMARK(BM_PsgAllArms)->Arg(4)->Arg(8)->Arg(64);
BENCHMARK(BM_LexOptimal)->Arg(4)->Arg(8)->Arg(64);
