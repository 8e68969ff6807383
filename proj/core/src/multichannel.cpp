#include "mocbandit/multichannel.hpp"

#include "mocbandit/error.hpp"

#include <algorithm>
#include <cmath>

namespace mocbandit {

double MultichannelSpec::max_rate() const
{
    return *std::max_element(rates.begin(), rates.end());
}

void MultichannelSpec::validate() const
{
    if (rates.empty() || gain_rates.empty())
        throw InvalidInput("multichannel model needs at least one rate and one channel");
    for (double r : rates)
        if (!(r > 0.0) || !std::isfinite(r))
            throw InvalidInput("transmission rates must be positive");
    for (double l : gain_rates)
        if (!(l > 0.0) || !std::isfinite(l))
            throw InvalidInput("channel gain rates must be positive");
    if (!(snr_max > 0.0) || !std::isfinite(snr_max))
        throw InvalidInput("maximum SNR must be positive");
}

bool transmission_succeeds(double gain, double snr, double rate)
{
    return !(std::log2(1.0 + gain * snr) < rate);
}

ExpectedRewards multichannel_means(const Context& x, const MultichannelSpec& spec)
{
    const std::size_t channels = spec.gain_rates.size();
    if (x.dims() != channels)
        throw InvalidInput("multichannel context must have one coordinate per channel");
    const double r_max = spec.max_rate();
    ExpectedRewards mu(spec.num_arms());
    for (std::size_t ri = 0; ri < spec.rates.size(); ++ri) {
        const double rate = spec.rates[ri];
        for (std::size_t q = 0; q < channels; ++q) {
            const double snr = x[q] * spec.snr_max;
            // snr == 0 gives exp(-inf) == 0: permanent outage
            const double success = std::exp(-spec.gain_rates[q] * (std::exp2(rate) - 1.0) / snr);
            mu[ri * channels + q] = {rate / r_max * success, success};
        }
    }
    return mu;
}

MultichannelEnvironment::MultichannelEnvironment(MultichannelSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), rng_(seed)
{
    spec_.validate();
}

Context MultichannelEnvironment::next_context(Round)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> coords(spec_.gain_rates.size());
    for (auto& c : coords)
        c = u(rng_);
    return Context(std::move(coords));
}

RewardVector MultichannelEnvironment::sample_reward(const Context& x, ArmId arm, RewardStream& noise) const
{
    const std::size_t channels = spec_.gain_rates.size();
    if (x.dims() != channels)
        throw InvalidInput("multichannel context must have one coordinate per channel");
    if (arm >= spec_.num_arms())
        throw InvalidInput("arm id out of range");
    const double rate = spec_.rates[arm / channels];
    const std::size_t q = arm % channels;
    const double gain = -std::log1p(-noise.uniform()) / spec_.gain_rates[q];
    const double s = transmission_succeeds(gain, x[q] * spec_.snr_max, rate) ? 1.0 : 0.0;
    return {rate / spec_.max_rate() * s, s};
}

ExpectedRewards MultichannelEnvironment::true_means(const Context& x) const
{
    return multichannel_means(x, spec_);
}

} // namespace mocbandit
