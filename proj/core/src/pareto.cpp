#include "mocbandit/pareto.hpp"

#include "mocbandit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mocbandit {

namespace {

void require_arms(const ExpectedRewards& mu)
{
    if (mu.empty())
        throw InvalidInput("expected reward set is empty");
    for (const auto& r : mu)
        require_finite(r);
}

} // namespace

DominanceRelation compare(const RewardVector& u, const RewardVector& v)
{
    require_finite(u);
    require_finite(v);
    const bool ge = u.dominant >= v.dominant && u.nondominant >= v.nondominant;
    const bool le = u.dominant <= v.dominant && u.nondominant <= v.nondominant;
    if (ge && le)
        return DominanceRelation::Equal;
    if (ge)
        return DominanceRelation::Dominates;
    if (le)
        return DominanceRelation::DominatedBy;
    return DominanceRelation::Incomparable;
}

std::vector<ArmId> pareto_front(const ExpectedRewards& mu)
{
    require_arms(mu);

    // Sweep in decreasing dominant order; within a group of equal dominant
    // means only the group's best non-dominant value can survive, and it
    // survives iff it beats everything seen in earlier groups.
    std::vector<ArmId> order(mu.size());
    std::iota(order.begin(), order.end(), ArmId{0});
    std::sort(order.begin(), order.end(), [&](ArmId a, ArmId b) {
        if (mu[a].dominant != mu[b].dominant)
            return mu[a].dominant > mu[b].dominant;
        return mu[a].nondominant > mu[b].nondominant;
    });

    std::vector<ArmId> front;
    double best_before = -std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (i < order.size()) {
        const double group_dominant = mu[order[i]].dominant;
        const double group_best = mu[order[i]].nondominant;
        std::size_t j = i;
        for (; j < order.size() && mu[order[j]].dominant == group_dominant; ++j) {
            if (mu[order[j]].nondominant == group_best && group_best > best_before)
                front.push_back(order[j]);
        }
        best_before = std::max(best_before, group_best);
        i = j;
    }
    std::sort(front.begin(), front.end());
    return front;
}

double psg(ArmId arm, const ExpectedRewards& mu, const std::vector<ArmId>& front)
{
    if (arm >= mu.size())
        throw InvalidInput("arm id out of range");
    double gap = 0.0;
    const RewardVector& self = mu[arm];
    for (ArmId f : front) {
        const double shift = std::min(mu[f].dominant - self.dominant, mu[f].nondominant - self.nondominant);
        gap = std::max(gap, shift);
    }
    return gap;
}

double psg(ArmId arm, const ExpectedRewards& mu)
{
    if (arm >= mu.size())
        throw InvalidInput("arm id out of range");
    return psg(arm, mu, pareto_front(mu));
}

LexOptimum lex_optimal(const ExpectedRewards& mu, double tie_tol)
{
    require_arms(mu);
    if (!(tie_tol >= 0.0) || !std::isfinite(tie_tol))
        throw InvalidInput("tie tolerance must be a finite non-negative number");

    LexOptimum out;
    out.dominant = mu[0].dominant;
    for (const auto& r : mu)
        out.dominant = std::max(out.dominant, r.dominant);

    const double threshold = out.dominant - tie_tol;
    bool have_best = false;
    for (ArmId a = 0; a < mu.size(); ++a) {
        if (mu[a].dominant < threshold)
            continue;
        out.dominant_maximizers.push_back(a);
        if (!have_best || mu[a].nondominant > mu[out.best].nondominant) {
            out.best = a;
            have_best = true;
        }
    }
    out.nondominant = mu[out.best].nondominant;
    return out;
}

} // namespace mocbandit
