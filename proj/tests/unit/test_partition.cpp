#include <mocbandit/cell_stats.hpp>
#include <mocbandit/error.hpp>
#include <mocbandit/partition.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace mocbandit;

TEST(Partition, LeftBoundaryMapsToFirstCell)
{
    EXPECT_EQ(locate(Context({0.0}), PartitionSpec(1, 4)).flat, 0u);
}

TEST(Partition, ClosedTopFaceMapsToLastCell)
{
    const PartitionSpec spec(2, 2);
    const CellIndex c = locate(Context({1.0, 1.0}), spec);
    EXPECT_EQ(c.flat, 3u);
    EXPECT_EQ(spec.unflatten(c), (std::vector<std::size_t>{1, 1}));
}

TEST(Partition, InteriorPoint)
{
    const PartitionSpec spec(2, 2);
    const CellIndex c = locate(Context({0.5, 0.24}), spec);
    EXPECT_EQ(c.flat, 2u);
    EXPECT_EQ(spec.unflatten(c), (std::vector<std::size_t>{1, 0}));
}

TEST(Partition, FlattenRoundTrip)
{
    const PartitionSpec spec(3, 5);
    for (std::size_t f = 0; f < spec.num_cells(); ++f) {
        const auto axis = spec.unflatten(CellIndex{f});
        EXPECT_EQ(spec.flatten(axis).flat, f);
    }
}

TEST(Partition, CellIsConstantInsideEachHypercube)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t m : {1u, 2u, 3u, 7u, 10u}) {
        const PartitionSpec spec(2, m);
        for (int i = 0; i < 2000; ++i) {
            const double a = u(rng);
            const double b = u(rng);
            const auto ia = std::min<std::size_t>(static_cast<std::size_t>(a * m), m - 1);
            const auto ib = std::min<std::size_t>(static_cast<std::size_t>(b * m), m - 1);
            // any point in the same closed-open box lands in the same cell
            const double a2 = (static_cast<double>(ia) + 0.5) / static_cast<double>(m);
            const double b2 = (static_cast<double>(ib) + 0.5) / static_cast<double>(m);
            EXPECT_EQ(locate(Context({a, b}), spec), locate(Context({a2, b2}), spec));
        }
    }
}

TEST(Partition, RejectsOutOfRangeContext)
{
    EXPECT_THROW(Context({1.5}), InvalidInput);
    EXPECT_THROW(Context({-0.1}), InvalidInput);
    EXPECT_THROW(Context({std::numeric_limits<double>::quiet_NaN()}), InvalidInput);
    EXPECT_THROW((void)locate(Context({0.5}), PartitionSpec(2, 3)), InvalidInput);
}

TEST(Partition, CellCountOverflowIsRejected)
{
    EXPECT_THROW(PartitionSpec(64, 1000), InvalidInput);
    EXPECT_THROW(PartitionSpec(2, 0), InvalidInput);
}

TEST(Partition, DefaultCellsPerAxis)
{
    EXPECT_EQ(default_cells_per_axis(100000, 1.0, 2), 10u);
    EXPECT_EQ(default_cells_per_axis(100000, 1.0, 2, PartitionMode::ParetoOptimal), 18u);
    EXPECT_EQ(default_cells_per_axis(100000, 1.0, 3), 7u);
    EXPECT_EQ(default_cells_per_axis(1000000, 1.0, 2), 16u);
}

TEST(Margin, Examples)
{
    HyperParams h;
    h.lipschitz = 1.0;
    h.alpha = 1.0;
    h.cells_per_axis = 4;
    EXPECT_DOUBLE_EQ(margin_of_tolerance(h, 1), 0.25);
    h.cells_per_axis = 2;
    EXPECT_DOUBLE_EQ(margin_of_tolerance(h, 4), 1.0);
    h.lipschitz = 2.0;
    h.alpha = 0.5;
    h.cells_per_axis = 16;
    EXPECT_DOUBLE_EQ(margin_of_tolerance(h, 1), 0.5);
}

TEST(Margin, ShrinksWithFinerPartition)
{
    HyperParams h;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t m = 1; m < 40; ++m) {
        h.cells_per_axis = m;
        const double v = margin_of_tolerance(h, 2);
        EXPECT_LT(v, prev);
        prev = v;
    }
}

TEST(CellStats, Examples)
{
    CellStats s;
    s = update_stats(s, {1.0, 0.0});
    EXPECT_EQ(s, (CellStats{1, 1.0, 0.0}));
    s = update_stats(s, {0.0, 1.0});
    EXPECT_EQ(s, (CellStats{2, 0.5, 0.5}));
    EXPECT_EQ(update_stats(CellStats{3, 0.5, 0.25}, {0.5, 0.25}), (CellStats{4, 0.5, 0.25}));
}

TEST(CellStats, RunningMeanMatchesArithmeticMean)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    CellStats s;
    long double sum1 = 0.0L;
    long double sum2 = 0.0L;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        const RewardVector r{u(rng), u(rng)};
        sum1 += r.dominant;
        sum2 += r.nondominant;
        s = update_stats(s, r);
    }
    EXPECT_EQ(s.count, static_cast<std::uint64_t>(n));
    EXPECT_NEAR(s.mean_dominant, static_cast<double>(sum1 / n), 1e-9);
    EXPECT_NEAR(s.mean_nondominant, static_cast<double>(sum2 / n), 1e-9);
}

TEST(CellStats, RejectsNonFiniteReward)
{
    EXPECT_THROW((void)update_stats(CellStats{}, {std::numeric_limits<double>::infinity(), 0.0}), InvalidInput);
}

TEST(StatsTable, RecordTouchesOneEntry)
{
    StatsTable table(6, 3);
    EXPECT_TRUE(table.dense());
    table.record(CellIndex{4}, 2, {1.0, 0.5});
    for (std::size_t c = 0; c < 6; ++c)
        for (ArmId a = 0; a < 3; ++a)
            EXPECT_EQ(table.at(CellIndex{c}, a).count, (c == 4 && a == 2) ? 1u : 0u);
    EXPECT_EQ(table.total_count(), 1u);
    table.clear();
    EXPECT_EQ(table.at(CellIndex{4}, 2).count, 0u);
}

TEST(StatsTable, SparseModeForHugePartitions)
{
    StatsTable table(std::size_t{1} << 30, 4);
    EXPECT_FALSE(table.dense());
    EXPECT_EQ(table.at(CellIndex{123456789}, 3).count, 0u);
    table.record(CellIndex{123456789}, 3, {0.25, 0.75});
    table.record(CellIndex{123456789}, 3, {0.75, 0.25});
    const CellStats& s = table.at(CellIndex{123456789}, 3);
    EXPECT_EQ(s.count, 2u);
    EXPECT_DOUBLE_EQ(s.mean_dominant, 0.5);
    EXPECT_EQ(table.at(CellIndex{123456788}, 3).count, 0u);
}
