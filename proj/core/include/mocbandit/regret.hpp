#pragma once

#include "mocbandit/environment.hpp"
#include "mocbandit/pareto.hpp"

#include <utility>
#include <vector>

namespace mocbandit {

/// Ground truth for one round, shared by every policy evaluated on that context.
struct RoundOracle {
    ExpectedRewards means;
    LexOptimum lex;
    std::vector<ArmId> front;
};

[[nodiscard]] RoundOracle make_round_oracle(const Environment& env, const Context& x);
[[nodiscard]] RoundOracle make_round_oracle(ExpectedRewards means, double tie_tol);

/// Regret and expected-reward increments charged for one decision.
struct RegretIncrement {
    double reg1 = 0.0;
    double reg2 = 0.0;
    double pareto = 0.0;
    double reward1 = 0.0;
    double reward2 = 0.0;
};

[[nodiscard]] RegretIncrement regret_increment(const RoundOracle& oracle, ArmId chosen);

/// Cumulative series sampled at checkpoints.
struct RegretTrace {
    std::vector<Round> t;
    std::vector<double> reg1;
    std::vector<double> reg2;
    std::vector<double> pareto;
    std::vector<double> reward1;
    std::vector<double> reward2;

    [[nodiscard]] std::size_t size() const noexcept { return t.size(); }
};

/// Running totals for one (run, policy) pair.
class RegretAccumulator {
public:
    RegretIncrement add(const RoundOracle& oracle, ArmId chosen);
    /// Appends the current totals to `trace` tagged with round t.
    void checkpoint(Round t, RegretTrace& trace) const;

    [[nodiscard]] const RegretIncrement& totals() const noexcept { return totals_; }

private:
    RegretIncrement totals_;
};

/// Convenience form that queries the environment's oracle directly.
RegretIncrement regret_step(RegretAccumulator& acc, const Environment& env, const Context& x, ArmId chosen);

/// 50 (by default) geometrically spaced rounds in [1, T) plus T itself, deduplicated.
[[nodiscard]] std::vector<Round> checkpoint_grid(Round horizon, std::size_t count = 50);

/// Constants of the high-probability regret envelope.
struct EnvelopeParams {
    double c1_max = 1.0;
    double c2_max = 1.0;
    double num_cells = 1.0; // m^d
    double num_arms = 1.0;
    double beta = 1.0;
    double margin = 1.0;    // v
    double log_conf = 1.0;  // A_{m,T}

    [[nodiscard]] double b_mt() const;
};

/// (eps1(t), eps2(t)):
///   eps1 = m^d K C1 + 2 B sqrt(K m^d t) + 2 (beta + 2) v t
///   eps2 = m^d K C2 + m^d C2 K (2 A / (beta^2 v^2)) + 2 B sqrt(K m^d t) + 2 v t
[[nodiscard]] std::pair<double, double> envelope(Round t, const EnvelopeParams& p);

struct GapBounds {
    double c1_max = 0.0;
    double c2_max = 0.0;
};

/// Upper estimate of max_x (mu^i_*(x) - min_a mu^i_a(x)) from a grid with
/// `points_per_axis` points per axis plus a Holder slack of 2 L h^alpha, h the
/// grid half-diagonal. Capped at 1 when `unit_rewards`.
[[nodiscard]] GapBounds estimate_gap_bounds(const Environment& env, std::size_t points_per_axis, double lipschitz,
                                            double alpha, bool unit_rewards = true);

/// Least-squares slope of log(value) against log(t) over the second half of
/// the checkpoints, skipping non-positive values. 0 when fewer than two usable
/// points remain (e.g. all-zero regret).
[[nodiscard]] double sublinearity_fit(const std::vector<Round>& t, const std::vector<double>& values);

} // namespace mocbandit
