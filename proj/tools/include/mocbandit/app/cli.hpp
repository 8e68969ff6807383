#pragma once

#include "mocbandit/app/config.hpp"
#include "mocbandit/experiment.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <utility>
#include <vector>

namespace mocbandit::app {

enum ExitCode : int { kSuccess = 0, kConfigError = 1, kRuntimeError = 2 };

/// One full experiment per uncertainty scale in sweep_scales().
struct SweepResult {
    std::vector<std::pair<double, ExperimentResult>> by_scale;

    /// Scale with the lowest final mean dominant regret for `algorithm`
    /// (first such scale on ties).
    [[nodiscard]] double best_scale(const std::string& algorithm) const;
    [[nodiscard]] const ExperimentResult& at(double scale) const;
};

[[nodiscard]] SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t jobs);

/// Directory name for a sweep factor: 1 -> "scale_1", 1/5 -> "scale_1_5".
[[nodiscard]] std::string scale_dir_name(double scale);

[[nodiscard]] nlohmann::json sweep_summary(const SweepResult& sweep);

/// Worker count from --jobs, then MOC_BANDIT_JOBS, then the processor count.
[[nodiscard]] std::size_t resolve_jobs(std::size_t flag_value);

/// Entry point: run | sweep | validate. Returns an ExitCode.
int cli_main(int argc, char** argv);

} // namespace mocbandit::app
