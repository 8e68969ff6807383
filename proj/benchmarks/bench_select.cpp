#include <benchmark/benchmark.h>

#include <mocbandit/gaussian_surface.hpp>
#include <mocbandit/moc_mab.hpp>
#include <mocbandit/policy_factory.hpp>
#include <mocbandit/rng.hpp>

#include <random>

using namespace mocbandit;

namespace {

PolicySettings settings(std::size_t k, std::size_t m)
{
    PolicySettings s;
    s.params.num_arms = k;
    s.params.cells_per_axis = m;
    s.params.horizon = 100000;
    s.params.scale = 0.1;
    s.dims = 2;
    return s;
}

// Warm a policy on the synthetic surface, then time select + update.
void BM_SelectUpdate(benchmark::State& state, const char* name)
{
    PolicyPtr p = make_policy(name, settings(4, 10), 1);
    GaussianSurfaceEnvironment env(GaussianSurfaceSpec::synthetic(), 2);
    Round t = 1;
    auto step = [&] {
        const Context x = env.next_context(t);
        const ArmId a = p->select(x, t);
        RewardStream noise(derive_seed(3, {t}));
        p->update(x, a, env.sample_reward(x, a, noise));
        ++t;
        return a;
    };
    for (int i = 0; i < 20000; ++i)
        step();
    for (auto _ : state)
        benchmark::DoNotOptimize(step());
    state.SetItemsProcessed(state.iterations());
}

void BM_MocSelectFrom(benchmark::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    HyperParams h;
    h.num_arms = k;
    h.cells_per_axis = 10;
    h.horizon = 100000;
    MocMab p(h, 2, 1);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<CellStats> stats(k);
    for (auto& s : stats)
        s = {5000, u(rng), u(rng)};
    for (auto _ : state)
        benchmark::DoNotOptimize(p.select_from(stats, CellIndex{0}));
}

} // namespace

BENCHMARK_CAPTURE(BM_SelectUpdate, mocmab, "mocmab");
BENCHMARK_CAPTURE(BM_SelectUpdate, cp_ucb1, "cp_ucb1");
BENCHMARK_CAPTURE(BM_SelectUpdate, cs_ucb1, "cs_ucb1");
BENCHMARK_CAPTURE(BM_SelectUpdate, cd_ucb1, "cd_ucb1");
BENCHMARK(BM_MocSelectFrom)->Arg(2)->Arg(8)->Arg(64);
