#pragma once

#include "mocbandit/environment.hpp"
#include "mocbandit/policy.hpp"
#include "mocbandit/regret.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mocbandit {

struct PolicyEntry {
    std::string name; // unique within a plan; also keys the policy's seeds
    std::function<PolicyPtr(std::uint64_t seed)> make;
    /// Envelope constants to check this policy's per-run traces against.
    std::optional<EnvelopeParams> envelope;
};

struct ExperimentPlan {
    std::function<EnvironmentPtr(std::uint64_t seed)> make_environment;
    std::vector<PolicyEntry> policies;
    Round horizon = 1;
    std::size_t runs = 1;
    std::uint64_t base_seed = 0;
    std::vector<Round> checkpoints; // empty -> checkpoint_grid(horizon)
    std::size_t jobs = 1;
    bool keep_round_log = false;
};

/// Mean and sample standard deviation across runs at each checkpoint.
struct AggregateTrace {
    std::vector<Round> t;
    std::vector<double> reg1_mean, reg1_std;
    std::vector<double> reg2_mean, reg2_std;
    std::vector<double> pareto_mean, pareto_std;
    std::vector<double> reward1_mean, reward1_std;
    std::vector<double> reward2_mean, reward2_std;
};

struct RoundLogEntry {
    Round t = 0;
    ArmId arm = 0;
    RewardVector reward;
    RegretIncrement increment;
};

struct PolicyResult {
    std::string name;
    std::vector<RegretTrace> runs;
    AggregateTrace aggregate;
    /// Per-run round logs; only filled with ExperimentPlan::keep_round_log.
    std::vector<std::vector<RoundLogEntry>> round_logs;

    std::size_t envelope_violations_reg1 = 0; // (run, checkpoint) pairs with Reg1 >= eps1
    std::size_t envelope_violations_reg2 = 0;
    std::size_t increment_bound_violations = 0; // rounds with a per-round gap above C_max
    std::size_t pareto_above_reg1 = 0;          // (run, checkpoint) pairs with PR > Reg1
};

struct ExperimentResult {
    Round horizon = 0;
    std::size_t runs = 0;
    std::vector<PolicyResult> policies;

    [[nodiscard]] const PolicyResult& policy(std::string_view name) const;
};

/// Run r uses seed base_seed + r. Contexts come from one environment instance
/// per run; each policy gets its own seed and its own reward noise keyed by
/// (run seed, policy name, t, arm), so adding or removing a policy never
/// changes another policy's trace. Runs execute on `jobs` worker threads and
/// the result does not depend on the thread count.
[[nodiscard]] ExperimentResult run_experiment(const ExperimentPlan& plan);

[[nodiscard]] AggregateTrace aggregate(const std::vector<RegretTrace>& runs);

} // namespace mocbandit
