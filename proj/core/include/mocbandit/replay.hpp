#pragma once

#include "mocbandit/environment.hpp"

#include <filesystem>
#include <functional>
#include <vector>

namespace mocbandit {

/// One logged round: the context and whether the shown ad was clicked.
struct ReplayRecord {
    std::vector<double> context;
    bool click = false;

    friend bool operator==(const ReplayRecord&, const ReplayRecord&) = default;
};

/// Ground-truth click probability used only by the regret oracle.
using ClickModel = std::function<double(const Context&)>;

/// Reads `x1,...,xd,click` CSV. Throws ConfigError on I/O or schema problems.
[[nodiscard]] std::vector<ReplayRecord> load_replay_csv(const std::filesystem::path& path);
void write_replay_csv(const std::filesystem::path& path, const std::vector<ReplayRecord>& records);

/// p(x) = base_rate * (1 + x_1).
[[nodiscard]] ClickModel linear_click_model(double base_rate);

/// Piecewise-constant click-rate estimate on a uniform grid with `bins` cells
/// per axis; empty cells fall back to the overall rate.
[[nodiscard]] ClickModel estimate_click_model(const std::vector<ReplayRecord>& records, std::size_t bins);

struct ClickSurrogate {
    std::vector<ReplayRecord> records;
    ClickModel model;
};

/// Synthetic log with contexts uniform on [0,1]^dims and clicks drawn from a
/// linear model whose average click rate is `mean_rate`.
[[nodiscard]] ClickSurrogate make_click_surrogate(std::size_t rounds, std::size_t dims, double mean_rate,
                                                  std::uint64_t seed);

/// Two-action display model replayed from a log. Arm 0 shows the ad and earns
/// (click, 0); arm 1 skips it and earns (0, 1).
class ReplayEnvironment final : public Environment {
public:
    static constexpr ArmId kDisplay = 0;
    static constexpr ArmId kSkip = 1;

    /// Throws ConfigError if the log holds fewer than `horizon` records.
    ReplayEnvironment(std::vector<ReplayRecord> records, ClickModel model, Round horizon);

    Context next_context(Round t) override;
    RewardVector sample_reward(const Context& x, ArmId arm, RewardStream& noise) const override;
    [[nodiscard]] ExpectedRewards true_means(const Context& x) const override;
    [[nodiscard]] std::size_t dims() const noexcept override { return dims_; }
    [[nodiscard]] std::size_t num_arms() const noexcept override { return 2; }

private:
    std::vector<ReplayRecord> records_;
    ClickModel model_;
    std::size_t dims_;
    std::size_t current_ = 0;
};

} // namespace mocbandit
