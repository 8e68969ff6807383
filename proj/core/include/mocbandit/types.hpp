#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mocbandit {

using ArmId = std::size_t;
using Round = std::uint64_t;

/// A point of the unit hypercube [0,1]^d observed before each decision.
class Context {
public:
    Context() = default;

    /// Validates every coordinate; throws InvalidInput on an empty vector
    /// or a coordinate outside [0,1] (NaN included).
    explicit Context(std::vector<double> coords);

    [[nodiscard]] std::size_t dims() const noexcept { return coords_.size(); }
    [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }
    [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }

    /// Context made of the first `n` coordinates.
    [[nodiscard]] Context prefix(std::size_t n) const;

    /// Context with `value` appended as a new trailing coordinate.
    [[nodiscard]] Context appended(double value) const;

    friend bool operator==(const Context&, const Context&) = default;

private:
    std::vector<double> coords_;
};

/// Two-objective reward (or expected reward): dominant first, non-dominant second.
struct RewardVector {
    double dominant = 0.0;
    double nondominant = 0.0;

    [[nodiscard]] double operator[](std::size_t i) const { return i == 0 ? dominant : nondominant; }
    [[nodiscard]] bool finite() const noexcept;

    friend bool operator==(const RewardVector&, const RewardVector&) = default;
};

/// Throws InvalidInput if either component is NaN or infinite.
void require_finite(const RewardVector& r);

/// Per-arm expected reward vectors mu_a(x) for one context.
using ExpectedRewards = std::vector<RewardVector>;

/// MOC-MAB inputs. `scale` multiplies every confidence width.
struct HyperParams {
    double lipschitz = 1.0;     // L
    double alpha = 1.0;         // Holder exponent, in (0,1]
    std::size_t cells_per_axis = 1; // m
    double beta = 1.0;
    Round horizon = 1;          // T
    std::size_t num_arms = 1;   // K
    double scale = 1.0;

    /// Throws InvalidInput on any violated invariant.
    void validate() const;
};

} // namespace mocbandit
