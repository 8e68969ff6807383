#include "mocbandit/gaussian_surface.hpp"

#include "mocbandit/error.hpp"

#include <cmath>

namespace mocbandit {

namespace {

double bump(const GaussianSurfaceSpec::Center& c, double x0, double x1, double variance)
{
    if (!c)
        return 0.0;
    const double d0 = x0 - (*c)[0];
    const double d1 = x1 - (*c)[1];
    return std::exp(-(d0 * d0 + d1 * d1) / (2.0 * variance));
}

void require_planar(const Context& x)
{
    if (x.dims() != 2)
        throw InvalidInput("Gaussian surface contexts must be 2-dimensional");
}

} // namespace

GaussianSurfaceSpec GaussianSurfaceSpec::synthetic()
{
    using C = std::array<double, 2>;
    GaussianSurfaceSpec s;
    s.arms = {
        {C{0.3, 0.5}, C{0.3, 0.7}},
        {C{0.3, 0.5}, C{0.3, 0.3}},
        {C{0.7, 0.5}, C{0.7, 0.5}},
        {std::nullopt, C{0.7, 0.5}},
    };
    s.variance = 0.3;
    return s;
}

ExpectedRewards gaussian_surface_means(const Context& x, const GaussianSurfaceSpec& spec)
{
    require_planar(x);
    ExpectedRewards mu(spec.arms.size());
    for (std::size_t a = 0; a < spec.arms.size(); ++a) {
        mu[a].dominant = bump(spec.arms[a].dominant, x[0], x[1], spec.variance);
        mu[a].nondominant = bump(spec.arms[a].nondominant, x[0], x[1], spec.variance);
    }
    return mu;
}

RewardVector gaussian_surface_sample(const Context& x, ArmId arm, const GaussianSurfaceSpec& spec,
                                     RewardStream& noise)
{
    require_planar(x);
    if (arm >= spec.arms.size())
        throw InvalidInput("arm id out of range");
    const auto& a = spec.arms[arm];
    const double p1 = bump(a.dominant, x[0], x[1], spec.variance);
    const double p2 = bump(a.nondominant, x[0], x[1], spec.variance);
    const double r1 = bernoulli(p1, noise);
    const double r2 = bernoulli(p2, noise);
    return {r1, r2};
}

GaussianSurfaceEnvironment::GaussianSurfaceEnvironment(GaussianSurfaceSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), rng_(seed)
{
    if (spec_.arms.empty())
        throw InvalidInput("Gaussian surface needs at least one arm");
    if (!(spec_.variance > 0.0))
        throw InvalidInput("Gaussian surface variance must be positive");
}

Context GaussianSurfaceEnvironment::next_context(Round)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x0 = u(rng_);
    const double x1 = u(rng_);
    return Context({x0, x1});
}

RewardVector GaussianSurfaceEnvironment::sample_reward(const Context& x, ArmId arm, RewardStream& noise) const
{
    return gaussian_surface_sample(x, arm, spec_, noise);
}

ExpectedRewards GaussianSurfaceEnvironment::true_means(const Context& x) const
{
    return gaussian_surface_means(x, spec_);
}

} // namespace mocbandit
