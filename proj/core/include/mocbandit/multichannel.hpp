#pragma once

#include "mocbandit/environment.hpp"

#include <vector>

namespace mocbandit {

/// Rate/channel selection over fading channels. Arm (R, Q) has id
/// rate_index * channels + channel_index.
struct MultichannelSpec {
    std::vector<double> rates{1.0, 0.5, 0.25, 0.1};
    std::vector<double> gain_rates{0.25, 0.25}; // exponential rate of h^2 per channel
    double snr_max = 5.0;

    [[nodiscard]] std::size_t num_arms() const noexcept { return rates.size() * gain_rates.size(); }
    [[nodiscard]] double max_rate() const;
    void validate() const;
};

/// True iff log2(1 + h2 * snr) >= rate (no outage).
[[nodiscard]] bool transmission_succeeds(double gain, double snr, double rate);

/// Closed-form means: success P(h2 >= (2^R - 1)/SNR_Q) = exp(-lambda_Q (2^R - 1)/SNR_Q),
/// throughput R / R_max times that.
[[nodiscard]] ExpectedRewards multichannel_means(const Context& x, const MultichannelSpec& spec);

class MultichannelEnvironment final : public Environment {
public:
    MultichannelEnvironment(MultichannelSpec spec, std::uint64_t seed);

    /// SNR_Q ~ U[0, snr_max] per channel, reported as SNR_Q / snr_max.
    Context next_context(Round t) override;
    /// Draws h2 ~ Exp(lambda_Q); reward (R/R_max * s, s) with s the success indicator.
    RewardVector sample_reward(const Context& x, ArmId arm, RewardStream& noise) const override;
    [[nodiscard]] ExpectedRewards true_means(const Context& x) const override;
    [[nodiscard]] std::size_t dims() const noexcept override { return spec_.gain_rates.size(); }
    [[nodiscard]] std::size_t num_arms() const noexcept override { return spec_.num_arms(); }
    [[nodiscard]] double tie_tolerance() const noexcept override { return 1e-12; }

    [[nodiscard]] const MultichannelSpec& spec() const noexcept { return spec_; }

private:
    MultichannelSpec spec_;
    Engine rng_;
};

} // namespace mocbandit
