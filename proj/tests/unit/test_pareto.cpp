#include "oracles.hpp"

#include <mocbandit/error.hpp>
#include <mocbandit/pareto.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace mocbandit;

namespace {

ExpectedRewards random_instance(std::mt19937_64& rng, bool dyadic)
{
    std::uniform_int_distribution<std::size_t> k(1, 8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> grid(0, 16);
    ExpectedRewards mu(k(rng));
    for (auto& r : mu) {
        if (dyadic) {
            // coarse values make exact ties and equal vectors common
            r = {grid(rng) / 16.0, grid(rng) / 16.0};
        } else {
            r = {u(rng), u(rng)};
        }
    }
    return mu;
}

} // namespace

TEST(Compare, Examples)
{
    EXPECT_EQ(compare({0.7, 0.5}, {0.3, 0.3}), DominanceRelation::Dominates);
    EXPECT_EQ(compare({0.7, 0.5}, {0.3, 0.7}), DominanceRelation::Incomparable);
    EXPECT_EQ(compare({0.5, 0.5}, {0.5, 0.5}), DominanceRelation::Equal);
    // a tie in one objective with a strict gain in the other is full dominance
    EXPECT_EQ(compare({0.5, 0.6}, {0.5, 0.3}), DominanceRelation::Dominates);
    EXPECT_EQ(compare({0.5, 0.3}, {0.5, 0.6}), DominanceRelation::DominatedBy);
    EXPECT_EQ(compare({0.1, 0.1}, {0.5, 0.6}), DominanceRelation::DominatedBy);
}

TEST(Compare, Antisymmetric)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> g(0, 4);
    for (int i = 0; i < 5000; ++i) {
        const RewardVector u{g(rng) / 4.0, g(rng) / 4.0};
        const RewardVector v{g(rng) / 4.0, g(rng) / 4.0};
        const auto uv = compare(u, v);
        const auto vu = compare(v, u);
        switch (uv) {
        case DominanceRelation::Dominates: EXPECT_EQ(vu, DominanceRelation::DominatedBy); break;
        case DominanceRelation::DominatedBy: EXPECT_EQ(vu, DominanceRelation::Dominates); break;
        case DominanceRelation::WeaklyDominatesOnly: EXPECT_EQ(vu, DominanceRelation::WeaklyDominatedOnly); break;
        case DominanceRelation::WeaklyDominatedOnly: EXPECT_EQ(vu, DominanceRelation::WeaklyDominatesOnly); break;
        case DominanceRelation::Incomparable: EXPECT_EQ(vu, DominanceRelation::Incomparable); break;
        case DominanceRelation::Equal: EXPECT_EQ(vu, DominanceRelation::Equal); break;
        }
    }
}

TEST(ParetoFront, Examples)
{
    EXPECT_EQ(pareto_front({{0.7, 0.5}, {0.3, 0.7}, {0.2, 0.2}}), (std::vector<ArmId>{0, 1}));
    EXPECT_EQ(pareto_front({{1.0, 0.0}, {1.0, 0.0}}), (std::vector<ArmId>{0, 1}));
    EXPECT_EQ(pareto_front({{0.0, 0.0}}), (std::vector<ArmId>{0}));
}

TEST(ParetoFront, EmptyInputIsRejected)
{
    EXPECT_THROW((void)pareto_front({}), InvalidInput);
}

TEST(ParetoFront, MatchesPairwiseOracle)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10000; ++i) {
        const ExpectedRewards mu = random_instance(rng, i % 2 == 0);
        ASSERT_EQ(pareto_front(mu), oracle::front(mu)) << "instance " << i;
    }
}

TEST(Psg, Examples)
{
    const ExpectedRewards mu{{0.7, 0.5}, {0.3, 0.7}, {0.2, 0.2}};
    EXPECT_NEAR(psg(2, mu), 0.3, 1e-12);
    EXPECT_EQ(psg(0, mu), 0.0);
    EXPECT_EQ(psg(1, mu), 0.0);
    EXPECT_NEAR(psg(1, {{1.0, 1.0}, {0.4, 0.9}}), 0.1, 1e-12);
}

TEST(Psg, ExamplesAgreeWithSearch)
{
    const ExpectedRewards mu{{0.7, 0.5}, {0.3, 0.7}, {0.2, 0.2}};
    EXPECT_NEAR(oracle::psg_search(2, mu), 0.3, 2e-6);
    EXPECT_NEAR(oracle::psg_search(1, {{1.0, 1.0}, {0.4, 0.9}}), 0.1, 2e-6);
}

TEST(Psg, MatchesSearchOracle)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        const ExpectedRewards mu = random_instance(rng, i % 2 == 0);
        for (ArmId a = 0; a < mu.size(); ++a)
            ASSERT_NEAR(psg(a, mu), oracle::psg_search(a, mu), 2e-6) << "instance " << i << " arm " << a;
    }
}

TEST(Psg, ZeroExactlyOnFrontForGenericInstances)
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 10000; ++i) {
        const ExpectedRewards mu = random_instance(rng, false);
        const auto f = pareto_front(mu);
        std::vector<ArmId> zero;
        for (ArmId a = 0; a < mu.size(); ++a)
            if (psg(a, mu) == 0.0)
                zero.push_back(a);
        ASSERT_EQ(zero, f);
        for (ArmId a = 0; a < mu.size(); ++a)
            ASSERT_EQ(psg(a, mu), psg(a, mu, f));
    }
}

TEST(Psg, FrontMembersHaveZeroGapUnderTies)
{
    std::mt19937_64 rng(30);
    for (int i = 0; i < 10000; ++i) {
        const ExpectedRewards mu = random_instance(rng, true);
        for (ArmId a : pareto_front(mu))
            ASSERT_EQ(psg(a, mu), 0.0);
    }
}

TEST(Psg, TiedDominatedArmHasZeroGap)
{
    // any eps > 0 lifts (0.5, 0.5) past (0.5, 0.75) in the first objective, so the
    // infimum is 0 even though the arm is dominated
    const ExpectedRewards mu{{0.5, 0.75}, {0.5, 0.5}};
    EXPECT_EQ(pareto_front(mu), (std::vector<ArmId>{0}));
    EXPECT_EQ(psg(1, mu), 0.0);
    EXPECT_LE(oracle::psg_search(1, mu), 1e-6);
}

TEST(Psg, BoundedByDominantGapToLexOptimum)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10000; ++i) {
        const ExpectedRewards mu = random_instance(rng, true);
        const LexOptimum lex = lex_optimal(mu);
        for (ArmId a = 0; a < mu.size(); ++a)
            ASSERT_LE(psg(a, mu), lex.dominant - mu[a].dominant);
    }
}

TEST(LexOptimal, TiedDominantPrefersNonDominant)
{
    const LexOptimum lex = lex_optimal({{0.5, 1.0}, {0.5, 0.0}});
    EXPECT_EQ(lex.dominant_maximizers, (std::vector<ArmId>{0, 1}));
    EXPECT_EQ(lex.best, 0u);
    EXPECT_EQ(lex.dominant, 0.5);
    EXPECT_EQ(lex.nondominant, 1.0);
}

TEST(LexOptimal, SurfaceSnapshot)
{
    const LexOptimum lex = lex_optimal({{0.9834, 0.9834}, {0.9834, 0.8607}, {0.4, 0.9}, {0.0, 1.0}});
    EXPECT_EQ(lex.best, 0u);
    EXPECT_EQ(lex.dominant_maximizers, (std::vector<ArmId>{0, 1}));
}

TEST(LexOptimal, SingleArm)
{
    EXPECT_EQ(lex_optimal({{0.2, 0.3}}).best, 0u);
}

TEST(LexOptimal, ToleranceWidensTieSet)
{
    const ExpectedRewards mu{{0.9, 0.1}, {0.9 - 1e-13, 0.8}, {0.5, 1.0}};
    EXPECT_EQ(lex_optimal(mu).best, 0u);
    const LexOptimum tol = lex_optimal(mu, 1e-12);
    EXPECT_EQ(tol.best, 1u);
    EXPECT_EQ(tol.dominant, 0.9);
    EXPECT_EQ(tol.nondominant, 0.8);
}

TEST(LexOptimal, LowestIdBreaksFullTies)
{
    EXPECT_EQ(lex_optimal({{0.2, 0.1}, {0.7, 0.4}, {0.7, 0.4}}).best, 1u);
}

TEST(LexOptimal, OptimumLiesOnFront)
{
    std::mt19937_64 rng(37);
    for (int i = 0; i < 10000; ++i) {
        const ExpectedRewards mu = random_instance(rng, i % 2 == 0);
        const auto f = pareto_front(mu);
        ASSERT_TRUE(std::find(f.begin(), f.end(), lex_optimal(mu).best) != f.end()) << "instance " << i;
    }
}
