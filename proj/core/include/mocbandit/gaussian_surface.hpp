#pragma once

#include "mocbandit/environment.hpp"

#include <array>
#include <optional>
#include <vector>

namespace mocbandit {

/// Expected reward surfaces built from peak-normalized isotropic Gaussians:
/// mu(x) = exp(-|x - c|^2 / (2 variance)), or constant 0 when no center is set.
struct GaussianSurfaceSpec {
    using Center = std::optional<std::array<double, 2>>;
    struct Arm {
        Center dominant;
        Center nondominant;
    };

    std::vector<Arm> arms;
    double variance = 0.3;

    /// Four-arm surface of the synthetic study: dominant bumps at (0.3,0.5),
    /// (0.3,0.5), (0.7,0.5), none; non-dominant bumps at (0.3,0.7), (0.3,0.3),
    /// (0.7,0.5), (0.7,0.5).
    [[nodiscard]] static GaussianSurfaceSpec synthetic();
};

/// Expected rewards of every arm at x. Throws InvalidInput unless x is 2-dimensional.
[[nodiscard]] ExpectedRewards gaussian_surface_means(const Context& x, const GaussianSurfaceSpec& spec);

/// Independent Bernoulli draws per objective with the surface values as parameters.
[[nodiscard]] RewardVector gaussian_surface_sample(const Context& x, ArmId arm, const GaussianSurfaceSpec& spec,
                                                   RewardStream& noise);

/// Contexts uniform on [0,1]^2, Bernoulli rewards on a Gaussian surface.
class GaussianSurfaceEnvironment final : public Environment {
public:
    GaussianSurfaceEnvironment(GaussianSurfaceSpec spec, std::uint64_t seed);

    Context next_context(Round t) override;
    RewardVector sample_reward(const Context& x, ArmId arm, RewardStream& noise) const override;
    [[nodiscard]] ExpectedRewards true_means(const Context& x) const override;
    [[nodiscard]] std::size_t dims() const noexcept override { return 2; }
    [[nodiscard]] std::size_t num_arms() const noexcept override { return spec_.arms.size(); }

private:
    GaussianSurfaceSpec spec_;
    Engine rng_;
};

} // namespace mocbandit
