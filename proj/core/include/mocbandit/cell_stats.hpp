#pragma once

#include "mocbandit/partition.hpp"
#include "mocbandit/types.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace mocbandit {

/// Per (arm, cell) sample count and per-objective running means.
struct CellStats {
    std::uint64_t count = 0;
    double mean_dominant = 0.0;
    double mean_nondominant = 0.0;

    friend bool operator==(const CellStats&, const CellStats&) = default;
};

/// One running-mean step: mean <- (mean * N + r) / (N + 1), then N <- N + 1.
/// Throws InvalidInput on a non-finite reward.
[[nodiscard]] CellStats update_stats(const CellStats& s, const RewardVector& r);

/// Statistics for every (cell, arm) pair. Dense storage up to 2^24 entries,
/// a hash map keyed by cell * K + arm beyond that.
class StatsTable {
public:
    static constexpr std::size_t kDenseLimit = std::size_t{1} << 24;

    StatsTable(std::size_t num_cells, std::size_t num_arms);

    [[nodiscard]] const CellStats& at(CellIndex cell, ArmId arm) const;
    void record(CellIndex cell, ArmId arm, const RewardVector& r);
    void clear();

    [[nodiscard]] bool dense() const noexcept { return !sparse_mode_; }
    [[nodiscard]] std::size_t num_cells() const noexcept { return cells_; }
    [[nodiscard]] std::size_t num_arms() const noexcept { return arms_; }
    [[nodiscard]] std::uint64_t total_count() const noexcept { return total_; }

private:
    [[nodiscard]] std::size_t key(CellIndex cell, ArmId arm) const;

    std::size_t cells_;
    std::size_t arms_;
    bool sparse_mode_;
    std::uint64_t total_ = 0;
    std::vector<CellStats> dense_;
    std::unordered_map<std::size_t, CellStats> sparse_;
};

} // namespace mocbandit
