#pragma once

#include "mocbandit/partition.hpp"
#include "mocbandit/periodic.hpp"
#include "mocbandit/ucb.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mocbandit::app {

enum class ExperimentKind { SyntheticGaussian, Multichannel, Replay, Periodic };

[[nodiscard]] std::string to_string(ExperimentKind kind);

struct GaussianBlock {
    double variance = 0.3;
};

struct MultichannelBlock {
    std::vector<double> rates{1.0, 0.5, 0.25, 0.1};
    std::vector<double> gain_rates{0.25, 0.25};
    double snr_max = 5.0;
};

struct ReplayBlock {
    std::optional<std::filesystem::path> file; // absent -> synthetic surrogate
    double surrogate_click_rate = 0.0407;
    std::size_t dims = 4;                      // surrogate context dimension
    std::size_t click_model_bins = 0;          // 0 -> m
};

struct PeriodicBlock {
    Round period = 10000;
    bool use_time_context = true;
    PhaseProfile profile;
    GaussianBlock inner; // the wrapped environment is the synthetic Gaussian surface
};

/// Fully resolved experiment description. Every default is filled in by
/// parse_config(); nothing downstream consults the raw JSON.
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::SyntheticGaussian;
    Round horizon = 100000;
    std::size_t runs = 100;
    std::uint64_t base_seed = 1;
    std::vector<std::string> algorithms;

    double lipschitz = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    std::size_t cells_per_axis = 0; // m; resolved from the horizon unless given
    bool cells_explicit = false;
    double scale = 1.0;
    bool scale_sweep = false;
    PartitionMode mode = PartitionMode::TwoDimOptimal;
    WeightSchedule weight_schedule = WeightSchedule::Random;

    GaussianBlock gaussian;
    MultichannelBlock multichannel;
    ReplayBlock replay;
    PeriodicBlock periodic;

    std::filesystem::path output_dir = "results";
    std::size_t checkpoints = 50;
    bool dump_rounds = false;

    /// Context dimension seen by the learners.
    [[nodiscard]] std::size_t policy_dims() const;
    /// Context dimension produced by the environment.
    [[nodiscard]] std::size_t environment_dims() const;
};

/// Uncertainty scale factors of the comparison study's sweep.
[[nodiscard]] const std::vector<double>& sweep_scales();

/// Parses and validates; unknown keys and invariant violations raise
/// ConfigError naming the offending key path.
[[nodiscard]] ExperimentConfig parse_config(const std::filesystem::path& path);
[[nodiscard]] ExperimentConfig parse_config_json(const nlohmann::json& doc);

/// Resolved configuration in the same schema parse_config_json accepts.
[[nodiscard]] nlohmann::json to_json(const ExperimentConfig& cfg);

} // namespace mocbandit::app
