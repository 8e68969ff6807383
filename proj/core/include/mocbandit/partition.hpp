#pragma once

#include "mocbandit/types.hpp"

#include <cstddef>
#include <vector>

namespace mocbandit {

/// Flat row-major address of a hypercube in the uniform partition.
struct CellIndex {
    std::size_t flat = 0;
    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// Uniform partition of [0,1]^d into m^d hypercubes of edge 1/m.
class PartitionSpec {
public:
    /// Throws InvalidInput if d or m is zero or if m^d overflows std::size_t.
    PartitionSpec(std::size_t dims, std::size_t cells_per_axis);

    [[nodiscard]] std::size_t dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t cells_per_axis() const noexcept { return m_; }
    [[nodiscard]] std::size_t num_cells() const noexcept { return cells_; }

    [[nodiscard]] CellIndex flatten(std::span<const std::size_t> axis) const;
    [[nodiscard]] std::vector<std::size_t> unflatten(CellIndex cell) const;

private:
    std::size_t dims_;
    std::size_t m_;
    std::size_t cells_;
};

/// Cell containing `x`. Cells are half-open [k/m, (k+1)/m) on every axis,
/// except the last cell of an axis, which also owns the face at 1.0.
[[nodiscard]] CellIndex locate(const Context& x, const PartitionSpec& spec);

/// v = L * d^(alpha/2) * m^(-alpha).
[[nodiscard]] double margin_of_tolerance(const HyperParams& h, std::size_t dims);

/// How m is derived from the horizon when not given explicitly.
enum class PartitionMode {
    TwoDimOptimal, // m = ceil(T^(1/(3 alpha + d)))
    ParetoOptimal, // m = ceil(T^(1/(2 alpha + d)))
};

/// Default cells per axis for horizon T. Powers that land on an integer up to
/// rounding noise (e.g. 1e5^(1/5)) are not bumped to the next integer.
[[nodiscard]] std::size_t default_cells_per_axis(Round horizon, double alpha, std::size_t dims,
                                                 PartitionMode mode = PartitionMode::TwoDimOptimal);

} // namespace mocbandit
