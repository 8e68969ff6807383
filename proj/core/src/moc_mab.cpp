#include "mocbandit/moc_mab.hpp"

#include "mocbandit/error.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace mocbandit {

double uncertainty(std::uint64_t count, double log_confidence, double scale)
{
    if (count == 0)
        return std::numeric_limits<double>::infinity();
    return scale * std::sqrt(2.0 * log_confidence / static_cast<double>(count));
}

double log_confidence_constant(std::size_t num_arms, std::size_t cells_per_axis, std::size_t dims, Round horizon)
{
    if (num_arms == 0 || cells_per_axis == 0 || dims == 0 || horizon == 0)
        throw InvalidInput("log confidence constant needs positive K, m, d, T");
    const double log_term = std::log(4.0) + std::log(static_cast<double>(num_arms)) +
                            static_cast<double>(dims) * std::log(static_cast<double>(cells_per_axis)) +
                            1.5 * std::log(static_cast<double>(horizon));
    return 1.0 + 2.0 * log_term;
}

MocMab::MocMab(const HyperParams& params, std::size_t dims, std::uint64_t seed)
    : params_((params.validate(), params)),
      spec_(dims, params.cells_per_axis),
      stats_(spec_.num_cells(), params.num_arms),
      margin_(margin_of_tolerance(params, dims)),
      log_conf_(log_confidence_constant(params.num_arms, params.cells_per_axis, dims, params.horizon)),
      seed_(seed),
      rng_(seed),
      scratch_(params.num_arms),
      width_(params.num_arms)
{
    ties_.reserve(params.num_arms);
}

ArmId MocMab::pick(std::span<const ArmId> ties)
{
    if (ties.size() == 1)
        return ties.front();
    std::uniform_int_distribution<std::size_t> draw(0, ties.size() - 1);
    return ties[draw(rng_)];
}

ArmId MocMab::select(const Context& x, Round /*t*/)
{
    const CellIndex cell = locate(x, spec_);
    for (ArmId a = 0; a < params_.num_arms; ++a)
        scratch_[a] = stats_.at(cell, a);
    return select_from(scratch_, cell);
}

ArmId MocMab::select_from(std::span<const CellStats> stats, CellIndex cell)
{
    const std::size_t k = params_.num_arms;
    if (stats.size() != k)
        throw InvalidInput("cell state must have one entry per arm");

    last_.cell = cell;
    last_.candidates.clear();

    double best = -std::numeric_limits<double>::infinity();
    ties_.clear();
    for (ArmId a = 0; a < k; ++a) {
        width_[a] = uncertainty(stats[a].count, log_conf_, params_.scale);
        const double g1 = stats[a].mean_dominant + width_[a];
        if (g1 > best) {
            best = g1;
            ties_.assign(1, a);
        } else if (g1 == best) {
            ties_.push_back(a);
        }
    }
    const ArmId leader = pick(ties_);
    last_.leader = leader;

    const double threshold = params_.beta * margin_;
    if (width_[leader] > threshold) {
        last_.branch = MocBranch::Explore;
        last_.chosen = leader;
        return leader;
    }

    // u <= beta v  <=>  N >= 2 A scale^2 / (beta v)^2
    assert(static_cast<double>(stats[leader].count) * (1.0 + 1e-12) >=
           2.0 * log_conf_ * params_.scale * params_.scale / (threshold * threshold));

    last_.branch = MocBranch::Exploit;
    const double floor_common = stats[leader].mean_dominant - width_[leader] - 2.0 * margin_;
    best = -std::numeric_limits<double>::infinity();
    ties_.clear();
    for (ArmId a = 0; a < k; ++a) {
        if (!(stats[a].mean_dominant >= floor_common - width_[a]))
            continue;
        last_.candidates.push_back(a);
        const double g2 = stats[a].mean_nondominant + width_[a];
        if (g2 > best) {
            best = g2;
            ties_.assign(1, a);
        } else if (g2 == best) {
            ties_.push_back(a);
        }
    }
    const ArmId chosen = pick(ties_);
    last_.chosen = chosen;
    return chosen;
}

void MocMab::update(const Context& x, ArmId arm, const RewardVector& r)
{
    if (arm >= params_.num_arms)
        throw InvalidInput("arm id out of range");
    stats_.record(locate(x, spec_), arm, r);
}

void MocMab::reset()
{
    stats_.clear();
    rng_.seed(seed_);
    last_ = MocDecision{};
}

} // namespace mocbandit
