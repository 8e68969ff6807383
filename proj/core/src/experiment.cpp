#include "mocbandit/experiment.hpp"

#include "mocbandit/error.hpp"
#include "mocbandit/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace mocbandit {

namespace {

struct RunOutput {
    std::vector<RegretTrace> traces;
    std::vector<std::vector<RoundLogEntry>> logs;
    std::vector<std::size_t> increment_violations;
};

RunOutput run_once(const ExperimentPlan& plan, const std::vector<Round>& checkpoints, std::size_t run)
{
    const std::uint64_t run_seed = plan.base_seed + run;
    const std::size_t n = plan.policies.size();

    EnvironmentPtr env = plan.make_environment(derive_seed(run_seed, {name_key("environment")}));
    if (!env)
        throw ConfigError("environment factory returned null");

    std::vector<PolicyPtr> policies;
    std::vector<std::uint64_t> keys;
    policies.reserve(n);
    for (const auto& entry : plan.policies) {
        keys.push_back(name_key(entry.name));
        policies.push_back(entry.make(derive_seed(run_seed, {keys.back()})));
        if (!policies.back() || policies.back()->num_arms() != env->num_arms())
            throw ConfigError("policy '" + entry.name + "' does not match the environment's arm count");
    }

    RunOutput out;
    out.traces.resize(n);
    out.logs.resize(plan.keep_round_log ? n : 0);
    out.increment_violations.assign(n, 0);
    std::vector<RegretAccumulator> acc(n);

    std::size_t next_cp = 0;
    for (Round t = 1; t <= plan.horizon; ++t) {
        const Context x = env->next_context(t);
        const RoundOracle oracle = make_round_oracle(*env, x);
        for (std::size_t i = 0; i < n; ++i) {
            const ArmId arm = policies[i]->select(x, t);
            if (arm >= env->num_arms())
                throw std::logic_error("policy '" + plan.policies[i].name + "' selected an invalid arm");
            RewardStream noise(derive_seed(run_seed, {keys[i], t, arm}));
            const RewardVector r = env->sample_reward(x, arm, noise);
            policies[i]->update(x, arm, r);
            const RegretIncrement inc = acc[i].add(oracle, arm);
            if (const auto& e = plan.policies[i].envelope; e && (inc.reg1 > e->c1_max || inc.reg2 > e->c2_max))
                ++out.increment_violations[i];
            if (plan.keep_round_log)
                out.logs[i].push_back({t, arm, r, inc});
        }
        if (next_cp < checkpoints.size() && checkpoints[next_cp] == t) {
            for (std::size_t i = 0; i < n; ++i)
                acc[i].checkpoint(t, out.traces[i]);
            ++next_cp;
        }
    }
    return out;
}

double sample_std(const std::vector<double>& v, double mean)
{
    if (v.size() < 2)
        return 0.0;
    double ss = 0.0;
    for (double x : v)
        ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

} // namespace

const PolicyResult& ExperimentResult::policy(std::string_view name) const
{
    for (const auto& p : policies)
        if (p.name == name)
            return p;
    throw InvalidInput("no result for policy '" + std::string(name) + "'");
}

AggregateTrace aggregate(const std::vector<RegretTrace>& runs)
{
    AggregateTrace out;
    if (runs.empty())
        return out;
    out.t = runs.front().t;
    const std::size_t cps = out.t.size();
    for (const auto& r : runs)
        if (r.t != out.t)
            throw InvalidInput("cannot aggregate traces with different checkpoints");

    const auto series = [&](auto member, std::vector<double>& mean, std::vector<double>& sd) {
        mean.resize(cps);
        sd.resize(cps);
        std::vector<double> column(runs.size());
        for (std::size_t c = 0; c < cps; ++c) {
            double s = 0.0;
            for (std::size_t r = 0; r < runs.size(); ++r) {
                column[r] = (runs[r].*member)[c];
                s += column[r];
            }
            mean[c] = s / static_cast<double>(runs.size());
            sd[c] = sample_std(column, mean[c]);
        }
    };
    series(&RegretTrace::reg1, out.reg1_mean, out.reg1_std);
    series(&RegretTrace::reg2, out.reg2_mean, out.reg2_std);
    series(&RegretTrace::pareto, out.pareto_mean, out.pareto_std);
    series(&RegretTrace::reward1, out.reward1_mean, out.reward1_std);
    series(&RegretTrace::reward2, out.reward2_mean, out.reward2_std);
    return out;
}

ExperimentResult run_experiment(const ExperimentPlan& plan)
{
    if (!plan.make_environment)
        throw ConfigError("experiment has no environment");
    if (plan.policies.empty())
        throw ConfigError("experiment has no policies");
    if (plan.horizon == 0 || plan.runs == 0)
        throw ConfigError("horizon and run count must be positive");
    std::set<std::string> names;
    for (const auto& p : plan.policies) {
        if (!p.make)
            throw ConfigError("policy '" + p.name + "' has no factory");
        if (!names.insert(p.name).second)
            throw ConfigError("duplicate policy name '" + p.name + "'");
    }

    std::vector<Round> checkpoints = plan.checkpoints.empty() ? checkpoint_grid(plan.horizon) : plan.checkpoints;
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() == 0 ||
        checkpoints.back() > plan.horizon)
        throw ConfigError("checkpoints must be increasing rounds within [1, horizon]");
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());

    std::vector<RunOutput> outputs(plan.runs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (std::size_t r = next++; r < plan.runs; r = next++) {
            try {
                outputs[r] = run_once(plan, checkpoints, r);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = plan.runs;
            }
        }
    };
    const std::size_t jobs = std::clamp<std::size_t>(plan.jobs, 1, plan.runs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    ExperimentResult result;
    result.horizon = plan.horizon;
    result.runs = plan.runs;
    for (std::size_t i = 0; i < plan.policies.size(); ++i) {
        PolicyResult pr;
        pr.name = plan.policies[i].name;
        for (std::size_t r = 0; r < plan.runs; ++r) {
            pr.runs.push_back(std::move(outputs[r].traces[i]));
            if (plan.keep_round_log)
                pr.round_logs.push_back(std::move(outputs[r].logs[i]));
            pr.increment_bound_violations += outputs[r].increment_violations[i];
        }
        for (const auto& trace : pr.runs) {
            for (std::size_t c = 0; c < trace.size(); ++c) {
                if (trace.pareto[c] > trace.reg1[c])
                    ++pr.pareto_above_reg1;
                if (const auto& e = plan.policies[i].envelope) {
                    const auto [eps1, eps2] = envelope(trace.t[c], *e);
                    if (!(trace.reg1[c] < eps1))
                        ++pr.envelope_violations_reg1;
                    if (!(trace.reg2[c] < eps2))
                        ++pr.envelope_violations_reg2;
                }
            }
        }
        pr.aggregate = aggregate(pr.runs);
        result.policies.push_back(std::move(pr));
    }
    return result;
}

} // namespace mocbandit
