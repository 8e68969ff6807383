#include "mocbandit/contextual.hpp"

#include "mocbandit/error.hpp"

namespace mocbandit {

ContextualWrap::ContextualWrap(PartitionSpec spec, std::size_t num_arms, CellPolicyFactory factory)
    : spec_(spec), num_arms_(num_arms), factory_(std::move(factory)), cells_(spec.num_cells()),
      local_rounds_(spec.num_cells(), 0)
{
    if (!factory_)
        throw InvalidInput("contextual wrapper needs an inner policy factory");
    if (num_arms_ == 0)
        throw InvalidInput("policy needs at least one arm");
}

Policy& ContextualWrap::inner(CellIndex cell)
{
    PolicyPtr& slot = cells_[cell.flat];
    if (!slot) {
        slot = factory_(cell);
        if (!slot || slot->num_arms() != num_arms_)
            throw InvalidInput("inner policy factory returned an incompatible policy");
    }
    return *slot;
}

ArmId ContextualWrap::select(const Context& x, Round)
{
    const CellIndex cell = locate(x, spec_);
    return inner(cell).select(x, ++local_rounds_[cell.flat]);
}

void ContextualWrap::update(const Context& x, ArmId arm, const RewardVector& r)
{
    inner(locate(x, spec_)).update(x, arm, r);
}

void ContextualWrap::reset()
{
    for (auto& c : cells_)
        c.reset();
    local_rounds_.assign(local_rounds_.size(), 0);
}

PolicyPtr contextual_wrap(CellPolicyFactory factory, const PartitionSpec& spec, std::size_t num_arms)
{
    return std::make_unique<ContextualWrap>(spec, num_arms, std::move(factory));
}

ProjectedPolicy::ProjectedPolicy(PolicyPtr inner, std::size_t dims) : inner_(std::move(inner)), dims_(dims)
{
    if (!inner_)
        throw InvalidInput("projected policy needs an inner policy");
    if (dims_ == 0)
        throw InvalidInput("projection must keep at least one coordinate");
}

ArmId ProjectedPolicy::select(const Context& x, Round t)
{
    return inner_->select(x.prefix(dims_), t);
}

void ProjectedPolicy::update(const Context& x, ArmId arm, const RewardVector& r)
{
    inner_->update(x.prefix(dims_), arm, r);
}

} // namespace mocbandit
