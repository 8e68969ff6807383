#include "oracles.hpp"

#include <mocbandit/error.hpp>
#include <mocbandit/experiment.hpp>
#include <mocbandit/fixed_means.hpp>
#include <mocbandit/gaussian_surface.hpp>
#include <mocbandit/policy_factory.hpp>

#include <gtest/gtest.h>

using namespace mocbandit;

namespace {

PolicyEntry entry(const std::string& name, std::size_t k, std::size_t m, Round horizon, double scale = 0.2)
{
    PolicySettings set;
    set.params.num_arms = k;
    set.params.cells_per_axis = m;
    set.params.horizon = horizon;
    set.params.scale = scale;
    set.dims = 2;
    return PolicyEntry{name, [name, set](std::uint64_t seed) { return make_policy(name, set, seed); }, std::nullopt};
}

ExperimentPlan surface_plan(std::vector<std::string> names, Round horizon, std::size_t runs)
{
    ExperimentPlan plan;
    plan.make_environment = [](std::uint64_t seed) {
        return std::make_unique<GaussianSurfaceEnvironment>(GaussianSurfaceSpec::synthetic(), seed);
    };
    for (const auto& n : names)
        plan.policies.push_back(entry(n, 4, 4, horizon));
    plan.horizon = horizon;
    plan.runs = runs;
    plan.base_seed = 5;
    return plan;
}

void expect_same(const AggregateTrace& a, const AggregateTrace& b)
{
    EXPECT_EQ(a.t, b.t);
    EXPECT_EQ(a.reg1_mean, b.reg1_mean);
    EXPECT_EQ(a.reg2_mean, b.reg2_mean);
    EXPECT_EQ(a.pareto_mean, b.pareto_mean);
    EXPECT_EQ(a.reward1_mean, b.reward1_mean);
    EXPECT_EQ(a.reward2_mean, b.reward2_mean);
    EXPECT_EQ(a.reg1_std, b.reg1_std);
}

} // namespace

TEST(Experiment, IdenticalSeedsIdenticalResults)
{
    const ExperimentPlan plan = surface_plan({"mocmab", "cp_ucb1"}, 3000, 2);
    const ExperimentResult a = run_experiment(plan);
    const ExperimentResult b = run_experiment(plan);
    for (const char* n : {"mocmab", "cp_ucb1"})
        expect_same(a.policy(n).aggregate, b.policy(n).aggregate);
}

TEST(Experiment, ThreadCountDoesNotMatter)
{
    ExperimentPlan plan = surface_plan({"mocmab", "s_ucb1"}, 2000, 3);
    const ExperimentResult serial = run_experiment(plan);
    plan.jobs = 3;
    const ExperimentResult parallel = run_experiment(plan);
    for (const char* n : {"mocmab", "s_ucb1"})
        expect_same(serial.policy(n).aggregate, parallel.policy(n).aggregate);
}

TEST(Experiment, PoliciesDoNotInfluenceEachOther)
{
    const ExperimentResult alone = run_experiment(surface_plan({"mocmab"}, 3000, 2));
    const ExperimentResult together = run_experiment(surface_plan({"p_ucb1", "mocmab", "cd_ucb1"}, 3000, 2));
    expect_same(alone.policy("mocmab").aggregate, together.policy("mocmab").aggregate);
}

TEST(Experiment, SingleArmHasNoRegret)
{
    ExperimentPlan plan;
    plan.make_environment = [](std::uint64_t seed) {
        return std::make_unique<FixedMeansEnvironment>(ExpectedRewards{{0.4, 0.6}}, 2,
                                                       FixedMeansEnvironment::Noise::Bernoulli, seed);
    };
    for (const auto& n : known_algorithms())
        plan.policies.push_back(entry(n, 1, 3, 2000));
    plan.horizon = 2000;
    plan.runs = 2;
    const ExperimentResult r = run_experiment(plan);
    for (const auto& p : r.policies)
        for (std::size_t i = 0; i < p.aggregate.t.size(); ++i) {
            EXPECT_EQ(p.aggregate.reg1_mean[i], 0.0) << p.name;
            EXPECT_EQ(p.aggregate.reg2_mean[i], 0.0) << p.name;
            EXPECT_EQ(p.aggregate.pareto_mean[i], 0.0) << p.name;
        }
}

TEST(Experiment, LexOraclePolicyHasNoRegret)
{
    ExperimentPlan plan = surface_plan({}, 5000, 2);
    plan.policies.push_back(PolicyEntry{
        "oracle", [](std::uint64_t) { return std::make_unique<oracle::LexOraclePolicy>(GaussianSurfaceSpec::synthetic()); },
        std::nullopt});
    const ExperimentResult r = run_experiment(plan);
    const AggregateTrace& a = r.policy("oracle").aggregate;
    for (std::size_t i = 0; i < a.t.size(); ++i) {
        EXPECT_EQ(a.reg1_mean[i], 0.0);
        EXPECT_EQ(a.reg2_mean[i], 0.0);
        EXPECT_EQ(a.pareto_mean[i], 0.0);
    }
}

TEST(Experiment, TracesFollowCheckpointsAndAccountingHolds)
{
    const ExperimentPlan plan = surface_plan({"mocmab", "p_ucb1"}, 5000, 3);
    const ExperimentResult r = run_experiment(plan);
    const auto grid = checkpoint_grid(5000);
    for (const auto& p : r.policies) {
        ASSERT_EQ(p.runs.size(), 3u);
        EXPECT_EQ(p.aggregate.t, grid);
        EXPECT_EQ(p.pareto_above_reg1, 0u);
        for (const RegretTrace& run : p.runs)
            for (std::size_t i = 0; i < run.size(); ++i) {
                EXPECT_LE(run.pareto[i], run.reg1[i] + 1e-9);
                if (i > 0) {
                    EXPECT_GE(run.reg1[i], run.reg1[i - 1]);
                    EXPECT_GE(run.pareto[i], run.pareto[i - 1]);
                    EXPECT_GE(run.reward1[i], run.reward1[i - 1]);
                    EXPECT_GE(run.reward2[i], run.reward2[i - 1]);
                }
            }
    }
}

TEST(Experiment, RoundLogMatchesTotals)
{
    ExperimentPlan plan = surface_plan({"mocmab"}, 1000, 1);
    plan.keep_round_log = true;
    const ExperimentResult r = run_experiment(plan);
    const PolicyResult& p = r.policy("mocmab");
    ASSERT_EQ(p.round_logs.size(), 1u);
    ASSERT_EQ(p.round_logs[0].size(), 1000u);
    double reg1 = 0.0;
    for (const auto& e : p.round_logs[0])
        reg1 += e.increment.reg1;
    EXPECT_NEAR(reg1, p.runs[0].reg1.back(), 1e-9);
}

TEST(Experiment, UnknownPolicyNameIsRejected)
{
    const ExperimentResult r = run_experiment(surface_plan({"mocmab"}, 10, 1));
    EXPECT_THROW((void)r.policy("nope"), InvalidInput);
}
