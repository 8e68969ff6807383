#pragma once

#include "mocbandit/types.hpp"

#include <vector>

namespace mocbandit {

/// Relation of u to v under componentwise (Pareto) ordering, exact comparison.
///
/// With two objectives "weak-only" relations cannot arise between distinct
/// vectors (u >= v with u != v is always strict dominance); they are kept so
/// the enumeration reads the same as the d_r-objective definitions.
enum class DominanceRelation {
    Dominates,
    WeaklyDominatesOnly,
    DominatedBy,
    WeaklyDominatedOnly,
    Incomparable,
    Equal,
};

[[nodiscard]] DominanceRelation compare(const RewardVector& u, const RewardVector& v);

/// Arms not dominated by any other arm, in increasing id order.
/// Arms with identical vectors are all kept.
[[nodiscard]] std::vector<ArmId> pareto_front(const ExpectedRewards& mu);

/// Pareto suboptimality gap of `arm`: the smallest uniform shift eps such that
/// mu_arm + eps is no longer dominated by a front arm. Zero on the front.
[[nodiscard]] double psg(ArmId arm, const ExpectedRewards& mu);

/// Same as psg() with a precomputed front (hot path of the regret accountant).
[[nodiscard]] double psg(ArmId arm, const ExpectedRewards& mu, const std::vector<ArmId>& front);

struct LexOptimum {
    std::vector<ArmId> dominant_maximizers; // A*: arms within tie_tol of the best dominant mean
    ArmId best = 0;                         // a*: max non-dominant mean over A*, lowest id on ties
    double dominant = 0.0;                  // max dominant mean over all arms
    double nondominant = 0.0;               // non-dominant mean of a*
};

/// Lexicographic oracle. tie_tol = 0 gives the exact definition; a positive
/// value widens A* for environments whose ties are only equal up to rounding.
[[nodiscard]] LexOptimum lex_optimal(const ExpectedRewards& mu, double tie_tol = 0.0);

} // namespace mocbandit
