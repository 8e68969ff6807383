#include "mocbandit/regret.hpp"

#include "mocbandit/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mocbandit {

RoundOracle make_round_oracle(ExpectedRewards means, double tie_tol)
{
    RoundOracle o;
    o.lex = lex_optimal(means, tie_tol);
    o.front = pareto_front(means);
    o.means = std::move(means);
    return o;
}

RoundOracle make_round_oracle(const Environment& env, const Context& x)
{
    return make_round_oracle(env.true_means(x), env.tie_tolerance());
}

RegretIncrement regret_increment(const RoundOracle& oracle, ArmId chosen)
{
    if (chosen >= oracle.means.size())
        throw InvalidInput("chosen arm out of range");
    const RewardVector& mu = oracle.means[chosen];
    RegretIncrement inc;
    inc.reg1 = oracle.lex.dominant - mu.dominant;
    inc.reg2 = oracle.lex.nondominant - mu.nondominant;
    inc.pareto = psg(chosen, oracle.means, oracle.front);
    inc.reward1 = mu.dominant;
    inc.reward2 = mu.nondominant;
    return inc;
}

RegretIncrement RegretAccumulator::add(const RoundOracle& oracle, ArmId chosen)
{
    const RegretIncrement inc = regret_increment(oracle, chosen);
    totals_.reg1 += inc.reg1;
    totals_.reg2 += inc.reg2;
    totals_.pareto += inc.pareto;
    totals_.reward1 += inc.reward1;
    totals_.reward2 += inc.reward2;
    return inc;
}

void RegretAccumulator::checkpoint(Round t, RegretTrace& trace) const
{
    trace.t.push_back(t);
    trace.reg1.push_back(totals_.reg1);
    trace.reg2.push_back(totals_.reg2);
    trace.pareto.push_back(totals_.pareto);
    trace.reward1.push_back(totals_.reward1);
    trace.reward2.push_back(totals_.reward2);
}

RegretIncrement regret_step(RegretAccumulator& acc, const Environment& env, const Context& x, ArmId chosen)
{
    return acc.add(make_round_oracle(env, x), chosen);
}

std::vector<Round> checkpoint_grid(Round horizon, std::size_t count)
{
    if (horizon == 0)
        throw InvalidInput("horizon must be positive");
    if (count == 0)
        throw InvalidInput("checkpoint count must be positive");
    std::vector<Round> grid;
    grid.reserve(count + 1);
    const double log_t = std::log(static_cast<double>(horizon));
    for (std::size_t i = 0; i < count; ++i) {
        const auto t = static_cast<Round>(std::llround(std::exp(log_t * static_cast<double>(i) / static_cast<double>(count))));
        const Round clamped = std::clamp<Round>(t, 1, horizon);
        if (grid.empty() || grid.back() < clamped)
            grid.push_back(clamped);
    }
    if (grid.back() != horizon)
        grid.push_back(horizon);
    return grid;
}

double EnvelopeParams::b_mt() const
{
    return 2.0 * std::sqrt(2.0 * log_conf);
}

std::pair<double, double> envelope(Round t, const EnvelopeParams& p)
{
    if (t == 0)
        throw InvalidInput("envelope is defined for t >= 1");
    const double tt = static_cast<double>(t);
    const double md_k = p.num_cells * p.num_arms;
    const double b = p.b_mt();
    const double sqrt_term = 2.0 * b * std::sqrt(md_k * tt);
    const double eps1 = md_k * p.c1_max + sqrt_term + 2.0 * (p.beta + 2.0) * p.margin * tt;
    const double eps2 = md_k * p.c2_max +
                        md_k * p.c2_max * (2.0 * p.log_conf / (p.beta * p.beta * p.margin * p.margin)) + sqrt_term +
                        2.0 * p.margin * tt;
    return {eps1, eps2};
}

GapBounds estimate_gap_bounds(const Environment& env, std::size_t points_per_axis, double lipschitz, double alpha,
                              bool unit_rewards)
{
    if (points_per_axis < 2)
        throw InvalidInput("gap grid needs at least two points per axis");
    const std::size_t d = env.dims();
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i)
        total *= points_per_axis;

    GapBounds out;
    std::vector<double> coords(d);
    std::vector<std::size_t> idx(d, 0);
    const double step = 1.0 / static_cast<double>(points_per_axis - 1);
    for (std::size_t n = 0; n < total; ++n) {
        std::size_t rest = n;
        for (std::size_t i = d; i-- > 0;) {
            idx[i] = rest % points_per_axis;
            rest /= points_per_axis;
            coords[i] = std::min(1.0, static_cast<double>(idx[i]) * step);
        }
        const ExpectedRewards mu = env.true_means(Context(coords));
        double max1 = mu[0].dominant, min1 = mu[0].dominant, min2 = mu[0].nondominant;
        for (const auto& m : mu) {
            max1 = std::max(max1, m.dominant);
            min1 = std::min(min1, m.dominant);
            min2 = std::min(min2, m.nondominant);
        }
        const LexOptimum lex = lex_optimal(mu, env.tie_tolerance());
        out.c1_max = std::max(out.c1_max, max1 - min1);
        out.c2_max = std::max(out.c2_max, lex.nondominant - min2);
    }
    const double half_diag = std::sqrt(static_cast<double>(d)) * step / 2.0;
    const double slack = 2.0 * lipschitz * std::pow(half_diag, alpha);
    out.c1_max += slack;
    out.c2_max += slack;
    if (unit_rewards) {
        out.c1_max = std::min(out.c1_max, 1.0);
        out.c2_max = std::min(out.c2_max, 1.0);
    }
    return out;
}

double sublinearity_fit(const std::vector<Round>& t, const std::vector<double>& values)
{
    if (t.size() != values.size())
        throw InvalidInput("fit needs one value per checkpoint");
    const std::size_t start = t.size() / 2;
    std::vector<double> xs, ys;
    for (std::size_t i = start; i < t.size(); ++i) {
        if (values[i] > 0.0 && t[i] > 0) {
            xs.push_back(std::log(static_cast<double>(t[i])));
            ys.push_back(std::log(values[i]));
        }
    }
    if (xs.size() < 2)
        return 0.0;
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

} // namespace mocbandit
