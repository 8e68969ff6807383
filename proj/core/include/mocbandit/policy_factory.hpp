#pragma once

#include "mocbandit/policy.hpp"
#include "mocbandit/ucb.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mocbandit {

/// Algorithm names accepted by make_policy().
[[nodiscard]] const std::vector<std::string>& known_algorithms();
[[nodiscard]] bool is_known_algorithm(std::string_view name);

struct PolicySettings {
    HyperParams params;          // m, K, T, scale are used by every algorithm
    std::size_t dims = 1;        // context dimension the policy sees
    WeightSchedule schedule = WeightSchedule::Random;
};

/// Builds one of mocmab, p_ucb1, s_ucb1, cp_ucb1, cs_ucb1, cd_ucb1.
/// Contextual baselines share MOC-MAB's partition; each cell gets a seed
/// derived from (seed, cell).
[[nodiscard]] PolicyPtr make_policy(std::string_view name, const PolicySettings& settings, std::uint64_t seed);

} // namespace mocbandit
