#include <benchmark/benchmark.h>

#include <mocbandit/experiment.hpp>
#include <mocbandit/gaussian_surface.hpp>
#include <mocbandit/multichannel.hpp>
#include <mocbandit/policy_factory.hpp>

using namespace mocbandit;

namespace {

template <class Env, class Spec>
ExperimentPlan plan_for(Spec spec, std::size_t arms, Round horizon)
{
    ExperimentPlan plan;
    plan.make_environment = [spec](std::uint64_t seed) { return std::make_unique<Env>(spec, seed); };
    PolicySettings s;
    s.params.num_arms = arms;
    s.params.cells_per_axis = 10;
    s.params.horizon = horizon;
    s.params.scale = 0.1;
    s.dims = 2;
    for (const auto& name : known_algorithms())
        plan.policies.push_back({name, [name, s](std::uint64_t seed) { return make_policy(name, s, seed); }, {}});
    plan.horizon = horizon;
    plan.runs = 1;
    return plan;
}

// Rounds per second for one run with all six policies.
void BM_SyntheticRun(benchmark::State& state)
{
    const auto horizon = static_cast<Round>(state.range(0));
    const ExperimentPlan plan = plan_for<GaussianSurfaceEnvironment>(GaussianSurfaceSpec::synthetic(), 4, horizon);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_experiment(plan));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(horizon));
}

void BM_MultichannelRun(benchmark::State& state)
{
    const auto horizon = static_cast<Round>(state.range(0));
    const ExperimentPlan plan = plan_for<MultichannelEnvironment>(MultichannelSpec{}, 8, horizon);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_experiment(plan));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(horizon));
}

} // namespace

BENCHMARK(BM_SyntheticRun)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultichannelRun)->Arg(10000)->Unit(benchmark::kMillisecond);
