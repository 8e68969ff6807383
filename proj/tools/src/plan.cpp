#include "mocbandit/app/plan.hpp"

#include "mocbandit/contextual.hpp"
#include "mocbandit/error.hpp"
#include "mocbandit/gaussian_surface.hpp"
#include "mocbandit/moc_mab.hpp"
#include "mocbandit/multichannel.hpp"
#include "mocbandit/policy_factory.hpp"
#include "mocbandit/replay.hpp"

#include <cmath>
#include <memory>

namespace mocbandit::app {

namespace {

GaussianSurfaceSpec gaussian_spec(const GaussianBlock& block)
{
    GaussianSurfaceSpec s = GaussianSurfaceSpec::synthetic();
    s.variance = block.variance;
    return s;
}

std::size_t gap_grid_points(std::size_t dims)
{
    if (dims <= 2)
        return 101;
    return dims == 3 ? 21 : 11;
}

} // namespace

std::function<EnvironmentPtr(std::uint64_t)> environment_factory(const ExperimentConfig& cfg)
{
    switch (cfg.experiment) {
    case ExperimentKind::SyntheticGaussian: {
        const auto spec = gaussian_spec(cfg.gaussian);
        return [spec](std::uint64_t seed) { return std::make_unique<GaussianSurfaceEnvironment>(spec, seed); };
    }
    case ExperimentKind::Multichannel: {
        MultichannelSpec spec;
        spec.rates = cfg.multichannel.rates;
        spec.gain_rates = cfg.multichannel.gain_rates;
        spec.snr_max = cfg.multichannel.snr_max;
        spec.validate();
        return [spec](std::uint64_t seed) { return std::make_unique<MultichannelEnvironment>(spec, seed); };
    }
    case ExperimentKind::Replay: {
        std::shared_ptr<const std::vector<ReplayRecord>> records;
        ClickModel model;
        if (cfg.replay.file) {
            auto loaded = load_replay_csv(*cfg.replay.file);
            if (loaded.empty())
                throw ConfigError("replay file " + cfg.replay.file->string() + " has no records");
            if (loaded.front().context.size() != cfg.replay.dims)
                throw ConfigError("replay file has " + std::to_string(loaded.front().context.size()) +
                                  " features but environment.dims is " + std::to_string(cfg.replay.dims));
            const std::size_t bins = cfg.replay.click_model_bins ? cfg.replay.click_model_bins : cfg.cells_per_axis;
            model = estimate_click_model(loaded, bins);
            records = std::make_shared<const std::vector<ReplayRecord>>(std::move(loaded));
        } else {
            auto surrogate = make_click_surrogate(cfg.horizon, cfg.replay.dims, cfg.replay.surrogate_click_rate,
                                                  derive_seed(cfg.base_seed, {name_key("replay-surrogate")}));
            model = surrogate.model;
            records = std::make_shared<const std::vector<ReplayRecord>>(std::move(surrogate.records));
        }
        if (records->size() < cfg.horizon)
            throw ConfigError("replay log has " + std::to_string(records->size()) + " records, horizon needs " +
                              std::to_string(cfg.horizon));
        const Round horizon = cfg.horizon;
        return [records, model, horizon](std::uint64_t) {
            return std::make_unique<ReplayEnvironment>(*records, model, horizon);
        };
    }
    case ExperimentKind::Periodic: {
        const auto spec = gaussian_spec(cfg.periodic.inner);
        const Round period = cfg.periodic.period;
        const PhaseProfile profile = cfg.periodic.profile;
        return [spec, period, profile](std::uint64_t seed) {
            return periodic_wrap(std::make_unique<GaussianSurfaceEnvironment>(spec, seed), period, profile);
        };
    }
    }
    throw ConfigError("unsupported experiment");
}

HyperParams policy_params(const ExperimentConfig& cfg, std::size_t num_arms, double scale)
{
    HyperParams h;
    h.lipschitz = cfg.lipschitz;
    h.alpha = cfg.alpha;
    h.cells_per_axis = cfg.cells_per_axis;
    h.beta = cfg.beta;
    h.horizon = cfg.horizon;
    h.num_arms = num_arms;
    h.scale = scale;
    return h;
}

EnvelopeParams envelope_params(const ExperimentConfig& cfg, const Environment& env)
{
    const std::size_t d = cfg.policy_dims();
    const HyperParams h = policy_params(cfg, env.num_arms(), cfg.scale);
    const GapBounds gaps = estimate_gap_bounds(env, gap_grid_points(env.dims()), cfg.lipschitz, cfg.alpha);
    EnvelopeParams p;
    p.c1_max = gaps.c1_max;
    p.c2_max = gaps.c2_max;
    p.num_cells = static_cast<double>(PartitionSpec(d, cfg.cells_per_axis).num_cells());
    p.num_arms = static_cast<double>(env.num_arms());
    p.beta = cfg.beta;
    p.margin = margin_of_tolerance(h, d);
    p.log_conf = log_confidence_constant(env.num_arms(), cfg.cells_per_axis, d, cfg.horizon);
    return p;
}

ExperimentPlan build_plan(const ExperimentConfig& cfg, double scale, std::size_t jobs)
{
    ExperimentPlan plan;
    plan.make_environment = environment_factory(cfg);
    plan.horizon = cfg.horizon;
    plan.runs = cfg.runs;
    plan.base_seed = cfg.base_seed;
    plan.checkpoints = checkpoint_grid(cfg.horizon, cfg.checkpoints);
    plan.jobs = jobs;
    plan.keep_round_log = cfg.dump_rounds;

    const EnvironmentPtr probe = plan.make_environment(0);
    const std::size_t k = probe->num_arms();
    const EnvelopeParams env_params = envelope_params(cfg, *probe);

    PolicySettings settings;
    settings.params = policy_params(cfg, k, scale);
    settings.dims = cfg.policy_dims();
    settings.schedule = cfg.weight_schedule;
    const bool project = settings.dims != probe->dims();

    for (const auto& name : cfg.algorithms) {
        PolicyEntry entry;
        entry.name = name;
        entry.make = [name, settings, project](std::uint64_t seed) -> PolicyPtr {
            PolicyPtr p = make_policy(name, settings, seed);
            if (project)
                return std::make_unique<ProjectedPolicy>(std::move(p), settings.dims);
            return p;
        };
        if (name == "mocmab")
            entry.envelope = env_params;
        plan.policies.push_back(std::move(entry));
    }
    return plan;
}

} // namespace mocbandit::app
