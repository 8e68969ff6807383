#pragma once

#include "mocbandit/partition.hpp"
#include "mocbandit/policy.hpp"

#include <functional>
#include <vector>

namespace mocbandit {

/// Builds the inner learner for one partition cell.
using CellPolicyFactory = std::function<PolicyPtr(CellIndex)>;

/// Runs an independent inner learner in every cell of a uniform partition.
/// Each inner instance sees its own round counter: the number of rounds
/// routed to its cell so far, including the current one.
class ContextualWrap final : public Policy {
public:
    ContextualWrap(PartitionSpec spec, std::size_t num_arms, CellPolicyFactory factory);

    ArmId select(const Context& x, Round t) override;
    void update(const Context& x, ArmId arm, const RewardVector& r) override;
    void reset() override;
    [[nodiscard]] std::size_t num_arms() const noexcept override { return num_arms_; }

    [[nodiscard]] const PartitionSpec& partition() const noexcept { return spec_; }
    [[nodiscard]] Round local_round(CellIndex cell) const { return local_rounds_.at(cell.flat); }

private:
    Policy& inner(CellIndex cell);

    PartitionSpec spec_;
    std::size_t num_arms_;
    CellPolicyFactory factory_;
    std::vector<PolicyPtr> cells_;
    std::vector<Round> local_rounds_;
};

[[nodiscard]] PolicyPtr contextual_wrap(CellPolicyFactory factory, const PartitionSpec& spec, std::size_t num_arms);

/// Feeds only the leading `dims` coordinates of each context to `inner`.
class ProjectedPolicy final : public Policy {
public:
    ProjectedPolicy(PolicyPtr inner, std::size_t dims);

    ArmId select(const Context& x, Round t) override;
    void update(const Context& x, ArmId arm, const RewardVector& r) override;
    void reset() override { inner_->reset(); }
    [[nodiscard]] std::size_t num_arms() const noexcept override { return inner_->num_arms(); }

private:
    PolicyPtr inner_;
    std::size_t dims_;
};

} // namespace mocbandit
