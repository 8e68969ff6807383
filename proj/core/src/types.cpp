#include "mocbandit/types.hpp"

#include "mocbandit/error.hpp"

#include <cmath>
#include <string>

namespace mocbandit {

Context::Context(std::vector<double> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw InvalidInput("context must have at least one coordinate");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const double c = coords_[i];
        if (!(c >= 0.0 && c <= 1.0))
            throw InvalidInput("context coordinate " + std::to_string(i) + " outside [0,1]");
    }
}

Context Context::prefix(std::size_t n) const
{
    if (n == 0 || n > coords_.size())
        throw InvalidInput("context prefix length out of range");
    return Context(std::vector<double>(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Context Context::appended(double value) const
{
    std::vector<double> out;
    out.reserve(coords_.size() + 1);
    out.assign(coords_.begin(), coords_.end());
    out.push_back(value);
    return Context(std::move(out));
}

bool RewardVector::finite() const noexcept
{
    return std::isfinite(dominant) && std::isfinite(nondominant);
}

void require_finite(const RewardVector& r)
{
    if (!r.finite())
        throw InvalidInput("reward vector has a non-finite component");
}

void HyperParams::validate() const
{
    if (!(lipschitz > 0.0) || !std::isfinite(lipschitz))
        throw InvalidInput("L must be positive and finite");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw InvalidInput("alpha must lie in (0,1]");
    if (cells_per_axis == 0)
        throw InvalidInput("m must be positive");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw InvalidInput("beta must be positive and finite");
    if (horizon == 0)
        throw InvalidInput("horizon must be positive");
    if (num_arms == 0)
        throw InvalidInput("number of arms must be positive");
    if (!(scale > 0.0 && scale <= 1.0))
        throw InvalidInput("uncertainty scale must lie in (0,1]");
}

} // namespace mocbandit
