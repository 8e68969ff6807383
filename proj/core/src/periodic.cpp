#include "mocbandit/periodic.hpp"

#include "mocbandit/error.hpp"

#include <cmath>
#include <numbers>

namespace mocbandit {

double PhaseProfile::operator()(double s, ArmId arm, std::size_t num_arms) const
{
    double phase = s;
    if (arm_phase_shift && num_arms > 0)
        phase += static_cast<double>(arm) / static_cast<double>(num_arms);
    phase -= std::floor(phase);
    return low + (high - low) * 0.5 * (1.0 + std::sin(2.0 * std::numbers::pi * phase));
}

void PhaseProfile::validate() const
{
    if (!(low >= 0.0 && low <= high && high <= 1.0))
        throw InvalidInput("phase profile must satisfy 0 <= low <= high <= 1");
}

double time_context(Round t, Round period)
{
    if (period < 2)
        throw InvalidInput("period must be at least 2");
    return static_cast<double>(t % period) / static_cast<double>(period);
}

PeriodicEnvironment::PeriodicEnvironment(EnvironmentPtr inner, Round period, PhaseProfile profile)
    : inner_(std::move(inner)), period_(period), profile_(profile)
{
    if (!inner_)
        throw InvalidInput("periodic wrapper needs an inner environment");
    if (period_ < 2)
        throw InvalidInput("period must be at least 2");
    profile_.validate();
}

void PeriodicEnvironment::require_extended(const Context& x) const
{
    if (x.dims() != dims())
        throw InvalidInput("periodic context must carry the time coordinate");
}

Context PeriodicEnvironment::next_context(Round t)
{
    return inner_->next_context(t).appended(time_context(t, period_));
}

RewardVector PeriodicEnvironment::sample_reward(const Context& x, ArmId arm, RewardStream& noise) const
{
    require_extended(x);
    const std::size_t d = inner_->dims();
    const RewardVector r = inner_->sample_reward(x.prefix(d), arm, noise);
    const double g = profile_(x[d], arm, num_arms());
    return {r.dominant * bernoulli(g, noise), r.nondominant * bernoulli(g, noise)};
}

ExpectedRewards PeriodicEnvironment::true_means(const Context& x) const
{
    require_extended(x);
    const std::size_t d = inner_->dims();
    ExpectedRewards mu = inner_->true_means(x.prefix(d));
    for (ArmId a = 0; a < mu.size(); ++a) {
        const double g = profile_(x[d], a, mu.size());
        mu[a].dominant *= g;
        mu[a].nondominant *= g;
    }
    return mu;
}

EnvironmentPtr periodic_wrap(EnvironmentPtr inner, Round period, PhaseProfile profile)
{
    return std::make_unique<PeriodicEnvironment>(std::move(inner), period, profile);
}

} // namespace mocbandit
