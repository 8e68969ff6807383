#include "oracles.hpp"

#include <mocbandit/fixed_means.hpp>
#include <mocbandit/gaussian_surface.hpp>
#include <mocbandit/moc_mab.hpp>
#include <mocbandit/rng.hpp>

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <limits>

using namespace mocbandit;

namespace {

HyperParams small_params(std::size_t k, std::size_t m, double scale = 1.0)
{
    HyperParams h;
    h.num_arms = k;
    h.cells_per_axis = m;
    h.horizon = 1000;
    h.scale = scale;
    return h;
}

std::uint64_t fnv(std::uint64_t h, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t table_hash(const StatsTable& t)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t c = 0; c < t.num_cells(); ++c)
        for (ArmId a = 0; a < t.num_arms(); ++a) {
            const CellStats& s = t.at(CellIndex{c}, a);
            h = fnv(h, s.count);
            h = fnv(h, std::bit_cast<std::uint64_t>(s.mean_dominant));
            h = fnv(h, std::bit_cast<std::uint64_t>(s.mean_nondominant));
        }
    return h;
}

struct Step {
    Context x;
    ArmId arm;
    RewardVector r;
};

} // namespace

TEST(Uncertainty, UnvisitedArmIsInfinite)
{
    EXPECT_EQ(uncertainty(0, 10.0, 1.0), std::numeric_limits<double>::infinity());
}

TEST(Uncertainty, UnitAtTwiceTheConstant)
{
    EXPECT_DOUBLE_EQ(uncertainty(80, 40.0, 1.0), 1.0);
}

TEST(Uncertainty, ConstantMatchesExtendedPrecision)
{
    const double a = log_confidence_constant(4, 10, 2, 100000);
    const auto ref = oracle::log_confidence(4, 10, 2, 100000);
    EXPECT_NEAR(a, static_cast<double>(ref), 1e-12);
    EXPECT_NEAR(a, 50.294294, 1e-5);
    EXPECT_NEAR(uncertainty(100, a, 1.0), static_cast<double>(std::sqrt(2.0L * ref / 100.0L)), 1e-12);
    EXPECT_NEAR(uncertainty(100, a, 1.0), 1.002939, 1e-6);
}

TEST(MocMab, MarginAndConstant)
{
    HyperParams h = small_params(4, 10);
    h.horizon = 100000;
    const MocMab p(h, 2, 1);
    EXPECT_NEAR(p.margin(), std::sqrt(2.0) / 10.0, 1e-15);
    EXPECT_NEAR(p.log_confidence(), 50.294294, 1e-5);
}

class MocMabSelect : public ::testing::Test {
protected:
    // v = 0.1; scale chosen so that counts 400 and 625 give u = 0.05 and 0.04
    MocMab make()
    {
        HyperParams h = small_params(2, 10);
        const double a = log_confidence_constant(2, 10, 1, h.horizon);
        h.scale = 0.05 / std::sqrt(2.0 * a / 400.0);
        return MocMab(h, 1, 5);
    }
};

TEST_F(MocMabSelect, CloseRunnerUpEntersCandidateSet)
{
    MocMab p = make();
    ASSERT_NEAR(p.margin(), 0.1, 1e-15);
    const std::vector<CellStats> s{{400, 0.9, 0.1}, {625, 0.8, 0.9}};
    EXPECT_EQ(p.select_from(s, CellIndex{0}), 1u);
    EXPECT_EQ(p.last_decision().branch, MocBranch::Exploit);
    EXPECT_EQ(p.last_decision().leader, 0u);
    EXPECT_EQ(p.last_decision().candidates, (std::vector<ArmId>{0, 1}));
}

TEST_F(MocMabSelect, DistantRunnerUpIsExcluded)
{
    MocMab p = make();
    const std::vector<CellStats> s{{400, 0.9, 0.1}, {625, 0.55, 0.9}};
    EXPECT_EQ(p.select_from(s, CellIndex{0}), 0u);
    EXPECT_EQ(p.last_decision().candidates, (std::vector<ArmId>{0}));
}

TEST(MocMab, FreshStateIsUniform)
{
    MocMab p(small_params(4, 1), 1, 99);
    const std::vector<CellStats> fresh(4);
    std::array<int, 4> hits{};
    const int n = 40000;
    for (int i = 0; i < n; ++i) {
        const ArmId a = p.select_from(fresh, CellIndex{0});
        EXPECT_EQ(p.last_decision().branch, MocBranch::Explore);
        ++hits[a];
    }
    // 5 standard deviations of Binomial(n, 1/4)
    const double sd = std::sqrt(n * 0.25 * 0.75);
    for (int h : hits)
        EXPECT_NEAR(h, n / 4.0, 5 * sd);
}

TEST(MocMab, UpdateTouchesOneCell)
{
    MocMab p(small_params(3, 4), 2, 1);
    p.update(Context({0.1, 0.9}), 2, {1.0, 0.0});
    p.update(Context({0.9, 0.1}), 0, {0.0, 1.0});
    const CellIndex c1 = locate(Context({0.1, 0.9}), p.partition());
    const CellIndex c2 = locate(Context({0.9, 0.1}), p.partition());
    for (std::size_t c = 0; c < p.partition().num_cells(); ++c)
        for (ArmId a = 0; a < 3; ++a) {
            const bool hit = (c == c1.flat && a == 2) || (c == c2.flat && a == 0);
            EXPECT_EQ(p.stats().at(CellIndex{c}, a).count, hit ? 1u : 0u);
        }
    EXPECT_EQ(p.stats().at(c1, 2).mean_dominant, 1.0);
    EXPECT_EQ(p.stats().at(c2, 0).mean_nondominant, 1.0);
}

TEST(MocMab, ReplayedTraceReproducesFrozenTable)
{
    HyperParams h = small_params(4, 5, 0.1);
    h.horizon = 5000;
    GaussianSurfaceEnvironment env(GaussianSurfaceSpec::synthetic(), 2024);
    MocMab live(h, 2, 7);
    std::vector<Step> trace;
    for (Round t = 1; t <= 5000; ++t) {
        const Context x = env.next_context(t);
        const ArmId a = live.select(x, t);
        RewardStream noise(derive_seed(2024, {t, a}));
        const RewardVector r = env.sample_reward(x, a, noise);
        live.update(x, a, r);
        trace.push_back({x, a, r});
    }
    MocMab fresh(h, 2, 12345);
    for (const Step& s : trace)
        fresh.update(s.x, s.arm, s.r);
    for (std::size_t c = 0; c < 25; ++c)
        for (ArmId a = 0; a < 4; ++a)
            ASSERT_EQ(fresh.stats().at(CellIndex{c}, a), live.stats().at(CellIndex{c}, a));
    EXPECT_EQ(table_hash(fresh.stats()), 0x6967e7b2a8d819aeULL);
}

TEST(MocMab, SameSeedSameChoices)
{
    HyperParams h = small_params(4, 3, 0.2);
    MocMab a(h, 2, 42);
    MocMab b(h, 2, 42);
    GaussianSurfaceEnvironment env(GaussianSurfaceSpec::synthetic(), 1);
    for (Round t = 1; t <= 3000; ++t) {
        const Context x = env.next_context(t);
        const ArmId ia = a.select(x, t);
        ASSERT_EQ(ia, b.select(x, t));
        RewardStream noise(derive_seed(9, {t}));
        const RewardVector r = env.sample_reward(x, ia, noise);
        a.update(x, ia, r);
        b.update(x, ia, r);
    }
    a.reset();
    MocMab c(h, 2, 42);
    const Context x({0.5, 0.5});
    for (Round t = 1; t <= 50; ++t)
        ASSERT_EQ(a.select(x, t), c.select(x, t));
}

TEST(MocMab, BranchInvariants)
{
    HyperParams h = small_params(4, 3, 0.3);
    h.horizon = 20000;
    MocMab p(h, 2, 3);
    GaussianSurfaceEnvironment env(GaussianSurfaceSpec::synthetic(), 8);
    const double thr = h.beta * p.margin();
    std::size_t exploit = 0;
    for (Round t = 1; t <= 20000; ++t) {
        const Context x = env.next_context(t);
        const CellIndex cell = locate(x, p.partition());
        std::vector<CellStats> before(4);
        for (ArmId a = 0; a < 4; ++a)
            before[a] = p.stats().at(cell, a);
        const ArmId arm = p.select(x, t);
        const MocDecision& d = p.last_decision();
        const double u_lead = uncertainty(before[d.leader].count, p.log_confidence(), h.scale);
        for (ArmId a = 0; a < 4; ++a)
            ASSERT_GE(before[d.leader].mean_dominant + u_lead,
                      before[a].mean_dominant + uncertainty(before[a].count, p.log_confidence(), h.scale));
        if (d.branch == MocBranch::Explore) {
            ASSERT_GT(u_lead, thr);
            ASSERT_EQ(arm, d.leader);
        } else {
            ++exploit;
            ASSERT_LE(u_lead, thr);
            ASSERT_TRUE(std::find(d.candidates.begin(), d.candidates.end(), d.leader) != d.candidates.end());
            ASSERT_TRUE(std::find(d.candidates.begin(), d.candidates.end(), arm) != d.candidates.end());
        }
        RewardStream noise(derive_seed(8, {t}));
        p.update(x, arm, env.sample_reward(x, arm, noise));
    }
    EXPECT_GT(exploit, 10000u);
}

TEST(MocMab, EveryArmTriedBeforeAnyIsOverSampled)
{
    HyperParams h = small_params(3, 2);
    MocMab p(h, 1, 77);
    const double thr = h.beta * p.margin();
    const auto cap = static_cast<std::uint64_t>(std::ceil(2.0 * p.log_confidence() / (thr * thr))) + 2;
    FixedMeansEnvironment env({{0.9, 0.1}, {0.5, 0.5}, {0.1, 0.9}}, 1, FixedMeansEnvironment::Noise::Bernoulli, 4);
    for (Round t = 1; t <= 4000; ++t) {
        const Context x = env.next_context(t);
        const ArmId arm = p.select(x, t);
        const CellIndex cell = locate(x, p.partition());
        if (p.stats().at(cell, arm).count + 1 >= cap)
            for (ArmId a = 0; a < 3; ++a)
                ASSERT_GE(p.stats().at(cell, a).count, 1u) << "round " << t;
        RewardStream noise(derive_seed(4, {t}));
        p.update(x, arm, env.sample_reward(x, arm, noise));
    }
}

TEST(MocMab, RejectsBadArm)
{
    MocMab p(small_params(2, 2), 1, 1);
    EXPECT_THROW(p.update(Context({0.5}), 2, {0.0, 0.0}), std::invalid_argument);
}
