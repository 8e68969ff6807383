#include "mocbandit/ucb.hpp"

#include "mocbandit/error.hpp"
#include "mocbandit/pareto.hpp"

#include <cmath>
#include <limits>

namespace mocbandit {

namespace {

ArmId uniform_pick(const std::vector<ArmId>& ties, Engine& rng)
{
    if (ties.size() == 1)
        return ties.front();
    std::uniform_int_distribution<std::size_t> draw(0, ties.size() - 1);
    return ties[draw(rng)];
}

void require_scale(double scale)
{
    if (!(scale > 0.0 && scale <= 1.0))
        throw InvalidInput("uncertainty scale must lie in (0,1]");
}

} // namespace

ArmId ucb1_select(std::span<const ArmStat> stats, Round t, double scale, Engine& rng)
{
    if (stats.empty())
        throw InvalidInput("UCB1 needs at least one arm");
    if (t == 0)
        throw InvalidInput("round index starts at 1");
    const double log_t = std::log(static_cast<double>(t));
    double best = -std::numeric_limits<double>::infinity();
    std::vector<ArmId> ties;
    for (ArmId a = 0; a < stats.size(); ++a) {
        const double index = stats[a].count == 0
                                 ? std::numeric_limits<double>::infinity()
                                 : stats[a].mean + scale * std::sqrt(2.0 * log_t / static_cast<double>(stats[a].count));
        if (index > best) {
            best = index;
            ties.assign(1, a);
        } else if (index == best) {
            ties.push_back(a);
        }
    }
    return uniform_pick(ties, rng);
}

ArmId pareto_ucb1_select(std::span<const CellStats> stats, Round t, double scale, Engine& rng)
{
    if (stats.empty())
        throw InvalidInput("Pareto-UCB1 needs at least one arm");
    if (t == 0)
        throw InvalidInput("round index starts at 1");
    for (ArmId a = 0; a < stats.size(); ++a)
        if (stats[a].count == 0)
            return a;

    const double k = static_cast<double>(stats.size());
    const double log_term = std::log(static_cast<double>(t) * std::pow(2.0 * k, 0.25));
    ExpectedRewards index(stats.size());
    for (ArmId a = 0; a < stats.size(); ++a) {
        const double width = scale * std::sqrt(2.0 / static_cast<double>(stats[a].count) * log_term);
        index[a] = {stats[a].mean_dominant + width, stats[a].mean_nondominant + width};
    }
    return uniform_pick(pareto_front(index), rng);
}

std::vector<Weights> default_scalarizations()
{
    return {Weights{1.0, 0.0}, Weights{0.5, 0.5}, Weights{0.0, 1.0}};
}

std::pair<ArmId, std::size_t> scalarized_ucb1_select(const std::vector<std::vector<ArmStat>>& stats,
                                                     std::span<const std::uint64_t> rounds_drawn,
                                                     WeightSchedule schedule, double scale, Engine& rng)
{
    if (stats.empty() || rounds_drawn.size() != stats.size())
        throw InvalidInput("scalarized UCB1 needs matching statistics and round counters");
    std::size_t j = 0;
    if (schedule == WeightSchedule::Random) {
        std::uniform_int_distribution<std::size_t> draw(0, stats.size() - 1);
        j = draw(rng);
    } else {
        std::uint64_t total = 0;
        for (auto n : rounds_drawn)
            total += n;
        j = static_cast<std::size_t>(total % stats.size());
    }
    const ArmId arm = ucb1_select(stats[j], rounds_drawn[j] + 1, scale, rng);
    return {arm, j};
}

DominantUcb1::DominantUcb1(std::size_t num_arms, double scale, std::uint64_t seed)
    : stats_(num_arms), scale_(scale), seed_(seed), rng_(seed)
{
    if (num_arms == 0)
        throw InvalidInput("policy needs at least one arm");
    require_scale(scale);
}

ArmId DominantUcb1::select(const Context&, Round t)
{
    return ucb1_select(stats_, t, scale_, rng_);
}

void DominantUcb1::update(const Context&, ArmId arm, const RewardVector& r)
{
    if (arm >= stats_.size())
        throw InvalidInput("arm id out of range");
    require_finite(r);
    stats_[arm].add(r.dominant);
}

void DominantUcb1::reset()
{
    stats_.assign(stats_.size(), ArmStat{});
    rng_.seed(seed_);
}

ParetoUcb1::ParetoUcb1(std::size_t num_arms, double scale, std::uint64_t seed)
    : stats_(num_arms), scale_(scale), seed_(seed), rng_(seed)
{
    if (num_arms == 0)
        throw InvalidInput("policy needs at least one arm");
    require_scale(scale);
}

ArmId ParetoUcb1::select(const Context&, Round t)
{
    return pareto_ucb1_select(stats_, t, scale_, rng_);
}

void ParetoUcb1::update(const Context&, ArmId arm, const RewardVector& r)
{
    if (arm >= stats_.size())
        throw InvalidInput("arm id out of range");
    stats_[arm] = update_stats(stats_[arm], r);
}

void ParetoUcb1::reset()
{
    stats_.assign(stats_.size(), CellStats{});
    rng_.seed(seed_);
}

ScalarizedUcb1::ScalarizedUcb1(std::size_t num_arms, double scale, std::uint64_t seed, std::vector<Weights> weights,
                               WeightSchedule schedule)
    : num_arms_(num_arms),
      scale_(scale),
      seed_(seed),
      weights_(std::move(weights)),
      schedule_(schedule),
      stats_(weights_.size(), std::vector<ArmStat>(num_arms)),
      rounds_(weights_.size(), 0),
      rng_(seed)
{
    if (num_arms == 0)
        throw InvalidInput("policy needs at least one arm");
    if (weights_.empty())
        throw InvalidInput("scalarized UCB1 needs at least one weight vector");
    require_scale(scale);
}

ArmId ScalarizedUcb1::select(const Context&, Round)
{
    auto [arm, j] = scalarized_ucb1_select(stats_, rounds_, schedule_, scale_, rng_);
    last_weight_ = j;
    ++rounds_[j];
    return arm;
}

void ScalarizedUcb1::update(const Context&, ArmId arm, const RewardVector& r)
{
    if (arm >= num_arms_)
        throw InvalidInput("arm id out of range");
    require_finite(r);
    stats_[last_weight_][arm].add(scalarize(weights_[last_weight_], r));
}

void ScalarizedUcb1::reset()
{
    for (auto& s : stats_)
        s.assign(num_arms_, ArmStat{});
    rounds_.assign(weights_.size(), 0);
    last_weight_ = 0;
    rng_.seed(seed_);
}

} // namespace mocbandit
