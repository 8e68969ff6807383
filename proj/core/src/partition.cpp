#include "mocbandit/partition.hpp"

#include "mocbandit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mocbandit {

PartitionSpec::PartitionSpec(std::size_t dims, std::size_t cells_per_axis)
    : dims_(dims), m_(cells_per_axis), cells_(1)
{
    if (dims_ == 0)
        throw InvalidInput("partition dimension must be positive");
    if (m_ == 0)
        throw InvalidInput("cells per axis must be positive");
    for (std::size_t i = 0; i < dims_; ++i) {
        if (cells_ > std::numeric_limits<std::size_t>::max() / m_)
            throw InvalidInput("partition with m=" + std::to_string(m_) + ", d=" + std::to_string(dims_) +
                               " has too many cells");
        cells_ *= m_;
    }
}

CellIndex PartitionSpec::flatten(std::span<const std::size_t> axis) const
{
    if (axis.size() != dims_)
        throw InvalidInput("axis index tuple has wrong dimension");
    std::size_t flat = 0;
    for (std::size_t k : axis) {
        if (k >= m_)
            throw InvalidInput("axis index out of range");
        flat = flat * m_ + k;
    }
    return CellIndex{flat};
}

std::vector<std::size_t> PartitionSpec::unflatten(CellIndex cell) const
{
    if (cell.flat >= cells_)
        throw InvalidInput("cell index out of range");
    std::vector<std::size_t> axis(dims_);
    std::size_t rest = cell.flat;
    for (std::size_t i = dims_; i-- > 0;) {
        axis[i] = rest % m_;
        rest /= m_;
    }
    return axis;
}

CellIndex locate(const Context& x, const PartitionSpec& spec)
{
    if (x.dims() != spec.dims())
        throw InvalidInput("context has dimension " + std::to_string(x.dims()) + ", partition expects " +
                           std::to_string(spec.dims()));
    const std::size_t m = spec.cells_per_axis();
    const double mf = static_cast<double>(m);
    std::size_t flat = 0;
    for (double c : x.coords()) {
        auto k = static_cast<std::size_t>(std::floor(c * mf));
        if (k > m - 1)
            k = m - 1;
        flat = flat * m + k;
    }
    return CellIndex{flat};
}

double margin_of_tolerance(const HyperParams& h, std::size_t dims)
{
    h.validate();
    if (dims == 0)
        throw InvalidInput("dimension must be positive");
    return h.lipschitz * std::pow(static_cast<double>(dims), h.alpha / 2.0) *
           std::pow(static_cast<double>(h.cells_per_axis), -h.alpha);
}

std::size_t default_cells_per_axis(Round horizon, double alpha, std::size_t dims, PartitionMode mode)
{
    if (horizon == 0)
        throw InvalidInput("horizon must be positive");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw InvalidInput("alpha must lie in (0,1]");
    if (dims == 0)
        throw InvalidInput("dimension must be positive");
    const double denom = (mode == PartitionMode::TwoDimOptimal ? 3.0 : 2.0) * alpha + static_cast<double>(dims);
    const double root = std::pow(static_cast<double>(horizon), 1.0 / denom);
    const double nearest = std::round(root);
    // 1e5^(1/5) evaluates to 10.000000000000002; treat that as exactly 10.
    const double value = std::abs(root - nearest) <= 1e-9 * root ? nearest : std::ceil(root);
    return static_cast<std::size_t>(std::max(1.0, value));
}

} // namespace mocbandit
