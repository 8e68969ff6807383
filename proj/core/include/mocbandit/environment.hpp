#pragma once

#include "mocbandit/rng.hpp"
#include "mocbandit/types.hpp"

#include <memory>
#include <string>

namespace mocbandit {

/// Keyed noise source handed to Environment::sample_reward.
using RewardStream = KeyedStream;

/// A context/reward generator whose expected rewards are known to the
/// evaluator (never to the learners).
///
/// sample_reward() must have expectation true_means(x)[arm] componentwise,
/// with noise bounded in [-1, 1] around the mean.
class Environment {
public:
    virtual ~Environment() = default;

    /// Context for round t (t >= 1). Rounds are requested in increasing order.
    virtual Context next_context(Round t) = 0;
    virtual RewardVector sample_reward(const Context& x, ArmId arm, RewardStream& noise) const = 0;
    [[nodiscard]] virtual ExpectedRewards true_means(const Context& x) const = 0;

    [[nodiscard]] virtual std::size_t dims() const noexcept = 0;
    [[nodiscard]] virtual std::size_t num_arms() const noexcept = 0;
    /// Tolerance the lexicographic oracle uses for dominant-objective ties.
    [[nodiscard]] virtual double tie_tolerance() const noexcept { return 0.0; }
};

using EnvironmentPtr = std::unique_ptr<Environment>;

/// Bernoulli draw with success probability p in [0,1] (1 -> always, 0 -> never).
[[nodiscard]] inline double bernoulli(double p, RewardStream& noise)
{
    return noise.uniform() < p ? 1.0 : 0.0;
}

} // namespace mocbandit
