#pragma once

#include "mocbandit/environment.hpp"

namespace mocbandit {

/// Context-independent arm means. Contexts are uniform on [0,1]^dims and only
/// exercise partition routing.
class FixedMeansEnvironment final : public Environment {
public:
    enum class Noise {
        None,      // rewards equal the means exactly
        Bernoulli, // independent Bernoulli draws per objective (means must lie in [0,1])
    };

    FixedMeansEnvironment(ExpectedRewards means, std::size_t dims, Noise noise, std::uint64_t seed);

    Context next_context(Round t) override;
    RewardVector sample_reward(const Context& x, ArmId arm, RewardStream& noise) const override;
    [[nodiscard]] ExpectedRewards true_means(const Context& x) const override;
    [[nodiscard]] std::size_t dims() const noexcept override { return dims_; }
    [[nodiscard]] std::size_t num_arms() const noexcept override { return means_.size(); }

private:
    ExpectedRewards means_;
    std::size_t dims_;
    Noise noise_;
    Engine rng_;
};

/// Two arms with equal dominant means 0.5 and non-dominant means (1, 0).
[[nodiscard]] ExpectedRewards tied_dominant_means();

} // namespace mocbandit
