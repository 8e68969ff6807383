#pragma once

#include "mocbandit/cell_stats.hpp"
#include "mocbandit/partition.hpp"
#include "mocbandit/policy.hpp"
#include "mocbandit/rng.hpp"

#include <cstdint>
#include <vector>

namespace mocbandit {

/// Confidence width scale * sqrt(2 A / N); +inf for an unvisited pair.
[[nodiscard]] double uncertainty(std::uint64_t count, double log_confidence, double scale);

/// A_{m,T} = 1 + 2 ln(4 K m^d T^(3/2)), evaluated in log space.
[[nodiscard]] double log_confidence_constant(std::size_t num_arms, std::size_t cells_per_axis, std::size_t dims,
                                             Round horizon);

/// Which branch of the selection rule produced the last decision.
enum class MocBranch { Explore, Exploit };

struct MocDecision {
    CellIndex cell;
    ArmId leader = 0;                 // argmax of the dominant index
    MocBranch branch = MocBranch::Explore;
    std::vector<ArmId> candidates;    // only filled on Exploit
    ArmId chosen = 0;
};

/// Multi-objective contextual learner with a dominant objective.
///
/// Keeps per-(cell, arm) sample means on a uniform partition. When the leading
/// arm of the dominant index is still uncertain (width > beta * v) it is
/// played; otherwise every arm whose dominant estimate lies within the joint
/// width plus 2v of the leader becomes a candidate and the candidate with the
/// best non-dominant index is played.
class MocMab final : public Policy {
public:
    MocMab(const HyperParams& params, std::size_t dims, std::uint64_t seed);

    ArmId select(const Context& x, Round t) override;
    void update(const Context& x, ArmId arm, const RewardVector& r) override;
    void reset() override;
    [[nodiscard]] std::size_t num_arms() const noexcept override { return params_.num_arms; }

    [[nodiscard]] const HyperParams& params() const noexcept { return params_; }
    [[nodiscard]] const PartitionSpec& partition() const noexcept { return spec_; }
    [[nodiscard]] const StatsTable& stats() const noexcept { return stats_; }
    [[nodiscard]] double margin() const noexcept { return margin_; }
    [[nodiscard]] double log_confidence() const noexcept { return log_conf_; }
    [[nodiscard]] const MocDecision& last_decision() const noexcept { return last_; }

    /// Selection from an explicitly supplied cell state (used for replaying
    /// hand-built statistics); `stats` must hold one entry per arm.
    ArmId select_from(std::span<const CellStats> stats, CellIndex cell);

private:
    ArmId pick(std::span<const ArmId> ties);

    HyperParams params_;
    PartitionSpec spec_;
    StatsTable stats_;
    double margin_;
    double log_conf_;
    std::uint64_t seed_;
    Engine rng_;
    std::vector<CellStats> scratch_;
    std::vector<double> width_;
    std::vector<ArmId> ties_;
    MocDecision last_;
};

} // namespace mocbandit
