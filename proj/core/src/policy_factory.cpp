#include "mocbandit/policy_factory.hpp"

#include "mocbandit/contextual.hpp"
#include "mocbandit/error.hpp"
#include "mocbandit/moc_mab.hpp"
#include "mocbandit/rng.hpp"

#include <algorithm>

namespace mocbandit {

const std::vector<std::string>& known_algorithms()
{
    static const std::vector<std::string> names{"mocmab", "p_ucb1", "s_ucb1", "cp_ucb1", "cs_ucb1", "cd_ucb1"};
    return names;
}

bool is_known_algorithm(std::string_view name)
{
    const auto& names = known_algorithms();
    return std::find(names.begin(), names.end(), name) != names.end();
}

PolicyPtr make_policy(std::string_view name, const PolicySettings& settings, std::uint64_t seed)
{
    const HyperParams& h = settings.params;
    h.validate();
    const std::size_t k = h.num_arms;
    const double scale = h.scale;

    if (name == "mocmab")
        return std::make_unique<MocMab>(h, settings.dims, seed);
    if (name == "p_ucb1")
        return std::make_unique<ParetoUcb1>(k, scale, seed);
    if (name == "s_ucb1")
        return std::make_unique<ScalarizedUcb1>(k, scale, seed, default_scalarizations(), settings.schedule);

    const PartitionSpec spec(settings.dims, h.cells_per_axis);
    const auto cell_seed = [seed](CellIndex c) { return derive_seed(seed, {c.flat}); };
    if (name == "cp_ucb1")
        return contextual_wrap(
            [=](CellIndex c) { return std::make_unique<ParetoUcb1>(k, scale, cell_seed(c)); }, spec, k);
    if (name == "cs_ucb1") {
        const WeightSchedule schedule = settings.schedule;
        return contextual_wrap(
            [=](CellIndex c) {
                return std::make_unique<ScalarizedUcb1>(k, scale, cell_seed(c), default_scalarizations(), schedule);
            },
            spec, k);
    }
    if (name == "cd_ucb1")
        return contextual_wrap(
            [=](CellIndex c) { return std::make_unique<DominantUcb1>(k, scale, cell_seed(c)); }, spec, k);

    throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

} // namespace mocbandit
