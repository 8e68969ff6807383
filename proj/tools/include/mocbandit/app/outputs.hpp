#pragma once

#include "mocbandit/app/config.hpp"
#include "mocbandit/experiment.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace mocbandit::app {

/// Header of every trace_<alg>.csv.
inline constexpr const char* kTraceHeader =
    "t,reg1_mean,reg1_std,reg2_mean,reg2_std,pareto_mean,pareto_std,cumrw1_mean,cumrw2_mean";

/// Numbers are written in shortest round-trip form, so files are
/// byte-identical across identical runs and parse back exactly.
void write_trace_csv(const std::filesystem::path& path, const AggregateTrace& trace);

/// Reads the columns write_trace_csv() emits; std columns of the cumulative
/// rewards are not stored and come back empty.
[[nodiscard]] AggregateTrace read_trace_csv(const std::filesystem::path& path);

/// Display name used in plots ("mocmab" -> "MOC-MAB").
[[nodiscard]] std::string display_name(const std::string& algorithm);

[[nodiscard]] nlohmann::json summarize(const ExperimentResult& result, const ExperimentConfig& cfg, double scale,
                                       double wall_clock_seconds);

/// Writes trace CSVs, summary.json, and the three regret SVGs into `dir`.
void emit_outputs(const ExperimentResult& result, const ExperimentConfig& cfg, double scale,
                  const std::filesystem::path& dir, double wall_clock_seconds);

/// Checks that `dir` can be written. With `create`, missing directories are
/// created and probed; without it the filesystem is left untouched. Throws
/// ConfigError on failure.
void preflight_output_dir(const std::filesystem::path& dir, bool create);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

} // namespace mocbandit::app
