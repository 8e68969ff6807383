#pragma once

#include "mocbandit/app/config.hpp"
#include "mocbandit/experiment.hpp"

namespace mocbandit::app {

/// Environment factory for the configured experiment. Replay logs are loaded
/// (or the surrogate generated) once, here, and shared by every run.
[[nodiscard]] std::function<EnvironmentPtr(std::uint64_t)> environment_factory(const ExperimentConfig& cfg);

/// Hyperparameters every configured learner is built from.
[[nodiscard]] HyperParams policy_params(const ExperimentConfig& cfg, std::size_t num_arms, double scale);

/// Envelope constants for MOC-MAB under `cfg`, with gap bounds estimated on a grid.
[[nodiscard]] EnvelopeParams envelope_params(const ExperimentConfig& cfg, const Environment& env);

/// Translates a resolved config into an engine plan at uncertainty scale `scale`.
[[nodiscard]] ExperimentPlan build_plan(const ExperimentConfig& cfg, double scale, std::size_t jobs);

} // namespace mocbandit::app
