#pragma once

#include "mocbandit/cell_stats.hpp"
#include "mocbandit/policy.hpp"
#include "mocbandit/rng.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mocbandit {

/// Single-objective arm statistics.
struct ArmStat {
    std::uint64_t count = 0;
    double mean = 0.0;

    void add(double reward)
    {
        mean = (mean * static_cast<double>(count) + reward) / static_cast<double>(count + 1);
        ++count;
    }
};

/// UCB1: uniform-random argmax of mean + scale * sqrt(2 ln t / n); unplayed arms first.
[[nodiscard]] ArmId ucb1_select(std::span<const ArmStat> stats, Round t, double scale, Engine& rng);

/// Empirical Pareto-UCB1 (two objectives): the lowest-id unplayed arm if any,
/// otherwise a uniform member of the Pareto front of the index vectors
/// mean^i + scale * sqrt((2/n) ln(t (2K)^(1/4))).
[[nodiscard]] ArmId pareto_ucb1_select(std::span<const CellStats> stats, Round t, double scale, Engine& rng);

using Weights = std::array<double, 2>;

/// Linear scalarization w . r.
[[nodiscard]] inline double scalarize(const Weights& w, const RewardVector& r)
{
    return w[0] * r.dominant + w[1] * r.nondominant;
}

/// The three scalarizations used in the comparison study.
[[nodiscard]] std::vector<Weights> default_scalarizations();

enum class WeightSchedule { Random, RoundRobin };

/// Scalarized UCB1 step: chooses weight function j (uniformly, or cyclically
/// from `rounds_drawn` for RoundRobin), then runs UCB1 on function j's own
/// statistics with its own round counter. Returns (arm, j).
[[nodiscard]] std::pair<ArmId, std::size_t> scalarized_ucb1_select(const std::vector<std::vector<ArmStat>>& stats,
                                                                   std::span<const std::uint64_t> rounds_drawn,
                                                                   WeightSchedule schedule, double scale, Engine& rng);

/// UCB1 on the dominant reward only.
class DominantUcb1 final : public Policy {
public:
    DominantUcb1(std::size_t num_arms, double scale, std::uint64_t seed);

    ArmId select(const Context& x, Round t) override;
    void update(const Context& x, ArmId arm, const RewardVector& r) override;
    void reset() override;
    [[nodiscard]] std::size_t num_arms() const noexcept override { return stats_.size(); }

    [[nodiscard]] std::span<const ArmStat> stats() const noexcept { return stats_; }

private:
    std::vector<ArmStat> stats_;
    double scale_;
    std::uint64_t seed_;
    Engine rng_;
};

class ParetoUcb1 final : public Policy {
public:
    ParetoUcb1(std::size_t num_arms, double scale, std::uint64_t seed);

    ArmId select(const Context& x, Round t) override;
    void update(const Context& x, ArmId arm, const RewardVector& r) override;
    void reset() override;
    [[nodiscard]] std::size_t num_arms() const noexcept override { return stats_.size(); }

private:
    std::vector<CellStats> stats_;
    double scale_;
    std::uint64_t seed_;
    Engine rng_;
};

class ScalarizedUcb1 final : public Policy {
public:
    ScalarizedUcb1(std::size_t num_arms, double scale, std::uint64_t seed,
                   std::vector<Weights> weights = default_scalarizations(),
                   WeightSchedule schedule = WeightSchedule::Random);

    ArmId select(const Context& x, Round t) override;
    /// Credits w_j . r to the weight function j picked by the preceding select().
    void update(const Context& x, ArmId arm, const RewardVector& r) override;
    void reset() override;
    [[nodiscard]] std::size_t num_arms() const noexcept override { return num_arms_; }

    [[nodiscard]] std::size_t last_weight() const noexcept { return last_weight_; }
    [[nodiscard]] std::span<const std::uint64_t> rounds_drawn() const noexcept { return rounds_; }

private:
    std::size_t num_arms_;
    double scale_;
    std::uint64_t seed_;
    std::vector<Weights> weights_;
    WeightSchedule schedule_;
    std::vector<std::vector<ArmStat>> stats_;
    std::vector<std::uint64_t> rounds_;
    std::size_t last_weight_ = 0;
    Engine rng_;
};

} // namespace mocbandit
