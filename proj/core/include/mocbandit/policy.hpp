#pragma once

#include "mocbandit/types.hpp"

#include <functional>
#include <memory>
#include <string>

namespace mocbandit {

/// Common select/update contract for every learner. Behavior depends only on
/// constructor arguments, the seed, and the history fed through update().
class Policy {
public:
    virtual ~Policy() = default;

    /// Arm to play in round t (t >= 1) for context x.
    virtual ArmId select(const Context& x, Round t) = 0;
    virtual void update(const Context& x, ArmId arm, const RewardVector& r) = 0;
    /// Forget all history and rewind the generator to its seed.
    virtual void reset() = 0;

    [[nodiscard]] virtual std::size_t num_arms() const noexcept = 0;
};

using PolicyPtr = std::unique_ptr<Policy>;

} // namespace mocbandit
