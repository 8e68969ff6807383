#include "mocbandit/fixed_means.hpp"

#include "mocbandit/error.hpp"

namespace mocbandit {

FixedMeansEnvironment::FixedMeansEnvironment(ExpectedRewards means, std::size_t dims, Noise noise,
                                             std::uint64_t seed)
    : means_(std::move(means)), dims_(dims), noise_(noise), rng_(seed)
{
    if (means_.empty())
        throw InvalidInput("fixed-means environment needs at least one arm");
    if (dims_ == 0)
        throw InvalidInput("context dimension must be positive");
    for (const auto& m : means_) {
        require_finite(m);
        if (noise_ == Noise::Bernoulli &&
            !(m.dominant >= 0.0 && m.dominant <= 1.0 && m.nondominant >= 0.0 && m.nondominant <= 1.0))
            throw InvalidInput("Bernoulli means must lie in [0,1]");
    }
}

Context FixedMeansEnvironment::next_context(Round)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> coords(dims_);
    for (auto& c : coords)
        c = u(rng_);
    return Context(std::move(coords));
}

RewardVector FixedMeansEnvironment::sample_reward(const Context&, ArmId arm, RewardStream& noise) const
{
    if (arm >= means_.size())
        throw InvalidInput("arm id out of range");
    const RewardVector& m = means_[arm];
    if (noise_ == Noise::None)
        return m;
    const double r1 = bernoulli(m.dominant, noise);
    const double r2 = bernoulli(m.nondominant, noise);
    return {r1, r2};
}

ExpectedRewards FixedMeansEnvironment::true_means(const Context&) const
{
    return means_;
}

ExpectedRewards tied_dominant_means()
{
    return {{0.5, 1.0}, {0.5, 0.0}};
}

} // namespace mocbandit
