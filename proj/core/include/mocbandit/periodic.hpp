#pragma once

#include "mocbandit/environment.hpp"

namespace mocbandit {

/// Time-of-period modulation g(s) = low + (high - low) * (1 + sin(2 pi s)) / 2.
/// With `arm_phase_shift` arm a is evaluated at s + a/K, so the modulation
/// reorders arms over the period instead of rescaling them all alike.
struct PhaseProfile {
    double low = 0.5;
    double high = 1.0;
    bool arm_phase_shift = true;

    [[nodiscard]] double operator()(double s, ArmId arm, std::size_t num_arms) const;
    void validate() const;
};

/// Time coordinate (t mod period) / period.
[[nodiscard]] double time_context(Round t, Round period);

/// Appends the time coordinate to every context of `inner` and scales each
/// arm's expected rewards by the phase profile at that coordinate. Samples
/// are the inner samples thinned by an independent Bernoulli(g) per objective.
class PeriodicEnvironment final : public Environment {
public:
    /// Throws InvalidInput if period < 2.
    PeriodicEnvironment(EnvironmentPtr inner, Round period, PhaseProfile profile = {});

    Context next_context(Round t) override;
    RewardVector sample_reward(const Context& x, ArmId arm, RewardStream& noise) const override;
    [[nodiscard]] ExpectedRewards true_means(const Context& x) const override;
    [[nodiscard]] std::size_t dims() const noexcept override { return inner_->dims() + 1; }
    [[nodiscard]] std::size_t num_arms() const noexcept override { return inner_->num_arms(); }
    [[nodiscard]] double tie_tolerance() const noexcept override { return inner_->tie_tolerance(); }

    [[nodiscard]] Round period() const noexcept { return period_; }
    [[nodiscard]] const PhaseProfile& profile() const noexcept { return profile_; }

private:
    void require_extended(const Context& x) const;

    EnvironmentPtr inner_;
    Round period_;
    PhaseProfile profile_;
};

[[nodiscard]] EnvironmentPtr periodic_wrap(EnvironmentPtr inner, Round period, PhaseProfile profile = {});

} // namespace mocbandit
