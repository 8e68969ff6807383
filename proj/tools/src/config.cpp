#include "mocbandit/app/config.hpp"

#include "mocbandit/error.hpp"
#include "mocbandit/policy_factory.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace mocbandit::app {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ConfigError("config: " + (path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string join(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

/// Read access to one JSON object that remembers which keys were consumed.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path))
    {
        if (!node_.is_object())
            fail(path_, "expected an object");
    }

    ~Section() = default;
    Section(const Section&) = delete;
    Section& operator=(const Section&) = delete;

    [[nodiscard]] bool has(const std::string& key) const
    {
        return node_.contains(key) && !node_.at(key).is_null();
    }

    const json& raw(const std::string& key)
    {
        seen_.insert(key);
        return node_.at(key);
    }

    /// The value at `key`, or `fallback` when absent or null.
    const json& raw_or(const std::string& key, const json& fallback)
    {
        seen_.insert(key);
        return has(key) ? node_.at(key) : fallback;
    }

    void mark(const std::string& key) { seen_.insert(key); }

    double number(const std::string& key, double fallback)
    {
        seen_.insert(key);
        if (!has(key))
            return fallback;
        const json& v = node_.at(key);
        if (!v.is_number())
            fail(join(path_, key), "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d))
            fail(join(path_, key), "expected a finite number");
        return d;
    }

    std::uint64_t integer(const std::string& key, std::uint64_t fallback)
    {
        seen_.insert(key);
        if (!has(key))
            return fallback;
        const json& v = node_.at(key);
        if (v.is_number_unsigned())
            return v.get<std::uint64_t>();
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
            return static_cast<std::uint64_t>(v.get<std::int64_t>());
        if (v.is_number_float()) {
            const double d = v.get<double>();
            if (d >= 0.0 && d == std::floor(d) && d < 1.8e19)
                return static_cast<std::uint64_t>(d);
        }
        fail(join(path_, key), "expected a non-negative integer");
    }

    bool boolean(const std::string& key, bool fallback)
    {
        seen_.insert(key);
        if (!has(key))
            return fallback;
        const json& v = node_.at(key);
        if (!v.is_boolean())
            fail(join(path_, key), "expected true or false");
        return v.get<bool>();
    }

    std::string string(const std::string& key, const std::string& fallback)
    {
        seen_.insert(key);
        if (!has(key))
            return fallback;
        const json& v = node_.at(key);
        if (!v.is_string())
            fail(join(path_, key), "expected a string");
        return v.get<std::string>();
    }

    std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback)
    {
        seen_.insert(key);
        if (!has(key))
            return fallback;
        const json& v = node_.at(key);
        if (!v.is_array() || v.empty())
            fail(join(path_, key), "expected a non-empty array of numbers");
        std::vector<double> out;
        for (const auto& e : v) {
            if (!e.is_number())
                fail(join(path_, key), "expected a non-empty array of numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }

    [[nodiscard]] std::string child(const std::string& key) const { return join(path_, key); }

    /// Rejects keys that were never consumed.
    void finish() const
    {
        for (const auto& [key, value] : node_.items())
            if (!seen_.count(key))
                fail(join(path_, key), "unknown key");
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

ExperimentKind parse_kind(const std::string& s)
{
    if (s == "synthetic_gaussian")
        return ExperimentKind::SyntheticGaussian;
    if (s == "multichannel")
        return ExperimentKind::Multichannel;
    if (s == "replay")
        return ExperimentKind::Replay;
    if (s == "periodic")
        return ExperimentKind::Periodic;
    fail("experiment", "must be one of synthetic_gaussian, multichannel, replay, periodic (got '" + s + "')");
}

std::string mode_name(PartitionMode m)
{
    return m == PartitionMode::TwoDimOptimal ? "two_d_optimal" : "pareto_optimal";
}

std::string schedule_name(WeightSchedule s)
{
    return s == WeightSchedule::Random ? "random" : "round_robin";
}

GaussianBlock parse_gaussian(Section& s)
{
    GaussianBlock g;
    g.variance = s.number("variance", g.variance);
    if (!(g.variance > 0.0))
        fail(s.child("variance"), "must be positive");
    return g;
}

void require_positive(const std::vector<double>& v, const std::string& path)
{
    for (double x : v)
        if (!(x > 0.0))
            fail(path, "entries must be positive");
}

} // namespace

std::string to_string(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::SyntheticGaussian: return "synthetic_gaussian";
    case ExperimentKind::Multichannel: return "multichannel";
    case ExperimentKind::Replay: return "replay";
    case ExperimentKind::Periodic: return "periodic";
    }
    return "unknown";
}

std::size_t ExperimentConfig::environment_dims() const
{
    switch (experiment) {
    case ExperimentKind::SyntheticGaussian: return 2;
    case ExperimentKind::Multichannel: return multichannel.gain_rates.size();
    case ExperimentKind::Replay: return replay.dims;
    case ExperimentKind::Periodic: return 3;
    }
    return 0;
}

std::size_t ExperimentConfig::policy_dims() const
{
    if (experiment == ExperimentKind::Periodic && !periodic.use_time_context)
        return environment_dims() - 1;
    return environment_dims();
}

const std::vector<double>& sweep_scales()
{
    static const std::vector<double> scales{1.0, 1.0 / 5, 1.0 / 10, 1.0 / 15, 1.0 / 20, 1.0 / 25, 1.0 / 30};
    return scales;
}

ExperimentConfig parse_config_json(const json& doc)
{
    Section root(doc, "");
    ExperimentConfig cfg;

    if (!root.has("experiment"))
        fail("experiment", "missing required key");
    cfg.experiment = parse_kind(root.string("experiment", ""));

    const bool channel = cfg.experiment == ExperimentKind::Multichannel;
    cfg.horizon = root.integer("horizon", channel ? 1000000 : 100000);
    cfg.runs = root.integer("runs", cfg.experiment == ExperimentKind::SyntheticGaussian ? 100 : 20);
    cfg.base_seed = root.integer("base_seed", 1);
    if (cfg.horizon < 1)
        fail("horizon", "must be at least 1");
    if (cfg.runs < 1)
        fail("runs", "must be at least 1");

    if (root.has("algorithms")) {
        const json& algs = root.raw("algorithms");
        if (!algs.is_array() || algs.empty())
            fail("algorithms", "expected a non-empty array of algorithm names");
        std::set<std::string> unique;
        for (const auto& a : algs) {
            if (!a.is_string() || !is_known_algorithm(a.get<std::string>()))
                fail("algorithms", "unknown algorithm " + a.dump());
            if (!unique.insert(a.get<std::string>()).second)
                fail("algorithms", "duplicate algorithm " + a.dump());
            cfg.algorithms.push_back(a.get<std::string>());
        }
    } else {
        root.mark("algorithms");
        cfg.algorithms = known_algorithms();
    }

    const std::string mode = root.string("mode", "two_d_optimal");
    if (mode == "two_d_optimal")
        cfg.mode = PartitionMode::TwoDimOptimal;
    else if (mode == "pareto_optimal")
        cfg.mode = PartitionMode::ParetoOptimal;
    else
        fail("mode", "must be two_d_optimal or pareto_optimal");

    const std::string schedule = root.string("weight_schedule", "random");
    if (schedule == "random")
        cfg.weight_schedule = WeightSchedule::Random;
    else if (schedule == "round_robin")
        cfg.weight_schedule = WeightSchedule::RoundRobin;
    else
        fail("weight_schedule", "must be random or round_robin");

    // environment block first: it fixes the context dimension used for m
    const json empty = json::object();
    {
        const json& node = root.raw_or("environment", empty);
        Section env(node, "environment");
        switch (cfg.experiment) {
        case ExperimentKind::SyntheticGaussian:
            cfg.gaussian = parse_gaussian(env);
            break;
        case ExperimentKind::Multichannel:
            cfg.multichannel.rates = env.numbers("rates", cfg.multichannel.rates);
            cfg.multichannel.gain_rates = env.numbers("gain_rates", cfg.multichannel.gain_rates);
            cfg.multichannel.snr_max = env.number("snr_max", cfg.multichannel.snr_max);
            require_positive(cfg.multichannel.rates, env.child("rates"));
            require_positive(cfg.multichannel.gain_rates, env.child("gain_rates"));
            if (!(cfg.multichannel.snr_max > 0.0))
                fail(env.child("snr_max"), "must be positive");
            break;
        case ExperimentKind::Replay:
            if (env.has("file"))
                cfg.replay.file = env.string("file", "");
            else
                env.mark("file");
            cfg.replay.surrogate_click_rate = env.number("surrogate_click_rate", cfg.replay.surrogate_click_rate);
            cfg.replay.dims = env.integer("dims", cfg.replay.dims);
            cfg.replay.click_model_bins = env.integer("click_model_bins", 0);
            if (!(cfg.replay.surrogate_click_rate >= 0.0 && cfg.replay.surrogate_click_rate <= 0.75))
                fail(env.child("surrogate_click_rate"), "must lie in [0, 0.75]");
            if (cfg.replay.dims < 1)
                fail(env.child("dims"), "must be at least 1");
            break;
        case ExperimentKind::Periodic: {
            cfg.periodic.period = env.integer("period", cfg.periodic.period);
            if (cfg.periodic.period < 2)
                fail(env.child("period"), "must be at least 2");
            cfg.periodic.use_time_context = env.boolean("use_time_context", true);
            if (env.has("profile")) {
                Section prof(env.raw("profile"), env.child("profile"));
                cfg.periodic.profile.low = prof.number("low", cfg.periodic.profile.low);
                cfg.periodic.profile.high = prof.number("high", cfg.periodic.profile.high);
                cfg.periodic.profile.arm_phase_shift = prof.boolean("arm_phase_shift", true);
                prof.finish();
                try {
                    cfg.periodic.profile.validate();
                } catch (const InvalidInput& e) {
                    fail(env.child("profile"), e.what());
                }
            } else {
                env.mark("profile");
            }
            if (env.has("inner")) {
                Section inner(env.raw("inner"), env.child("inner"));
                cfg.periodic.inner = parse_gaussian(inner);
                inner.finish();
            } else {
                env.mark("inner");
            }
            break;
        }
        }
        env.finish();
    }

    {
        const json& node = root.raw_or("hyperparams", empty);
        Section hp(node, "hyperparams");
        cfg.lipschitz = hp.number("L", cfg.experiment == ExperimentKind::Periodic ? 0.25 : 1.0);
        cfg.alpha = hp.number("alpha", 1.0);
        cfg.beta = hp.number("beta", cfg.experiment == ExperimentKind::Replay ? 0.1 : 1.0);
        cfg.scale = hp.number("scale", 1.0);
        cfg.scale_sweep = hp.boolean("scale_sweep", false);
        if (!(cfg.lipschitz > 0.0))
            fail(hp.child("L"), "must be positive");
        if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0))
            fail(hp.child("alpha"), "must lie in (0,1]");
        if (!(cfg.beta > 0.0))
            fail(hp.child("beta"), "must be positive");
        if (!(cfg.scale > 0.0 && cfg.scale <= 1.0))
            fail(hp.child("scale"), "must lie in (0,1]");
        if (hp.has("m")) {
            cfg.cells_per_axis = hp.integer("m", 0);
            cfg.cells_explicit = true;
            if (cfg.cells_per_axis < 1)
                fail(hp.child("m"), "must be at least 1");
        } else {
            hp.mark("m");
            cfg.cells_per_axis = default_cells_per_axis(cfg.horizon, cfg.alpha, cfg.policy_dims(), cfg.mode);
        }
        try {
            (void)PartitionSpec(cfg.policy_dims(), cfg.cells_per_axis);
        } catch (const InvalidInput& e) {
            fail(hp.child("m"), e.what());
        }
        hp.finish();
    }

    cfg.output_dir = root.string("output_dir", "results");
    cfg.checkpoints = root.integer("checkpoints", 50);
    if (cfg.checkpoints < 2)
        fail("checkpoints", "must be at least 2");
    cfg.dump_rounds = root.boolean("dump_rounds", false);

    root.finish();
    return cfg;
}

ExperimentConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: " + path.string() + ": malformed JSON: " + e.what());
    }
    return parse_config_json(doc);
}

nlohmann::json to_json(const ExperimentConfig& cfg)
{
    json j;
    j["experiment"] = to_string(cfg.experiment);
    j["horizon"] = cfg.horizon;
    j["runs"] = cfg.runs;
    j["base_seed"] = cfg.base_seed;
    j["algorithms"] = cfg.algorithms;
    j["mode"] = mode_name(cfg.mode);
    j["weight_schedule"] = schedule_name(cfg.weight_schedule);
    j["hyperparams"] = {{"L", cfg.lipschitz},          {"alpha", cfg.alpha}, {"beta", cfg.beta},
                        {"m", cfg.cells_per_axis},      {"scale", cfg.scale}, {"scale_sweep", cfg.scale_sweep}};

    json env = json::object();
    switch (cfg.experiment) {
    case ExperimentKind::SyntheticGaussian:
        env["variance"] = cfg.gaussian.variance;
        break;
    case ExperimentKind::Multichannel:
        env["rates"] = cfg.multichannel.rates;
        env["gain_rates"] = cfg.multichannel.gain_rates;
        env["snr_max"] = cfg.multichannel.snr_max;
        break;
    case ExperimentKind::Replay:
        if (cfg.replay.file)
            env["file"] = cfg.replay.file->string();
        env["surrogate_click_rate"] = cfg.replay.surrogate_click_rate;
        env["dims"] = cfg.replay.dims;
        env["click_model_bins"] = cfg.replay.click_model_bins;
        break;
    case ExperimentKind::Periodic:
        env["period"] = cfg.periodic.period;
        env["use_time_context"] = cfg.periodic.use_time_context;
        env["profile"] = {{"low", cfg.periodic.profile.low},
                          {"high", cfg.periodic.profile.high},
                          {"arm_phase_shift", cfg.periodic.profile.arm_phase_shift}};
        env["inner"] = {{"variance", cfg.periodic.inner.variance}};
        break;
    }
    j["environment"] = env;
    j["output_dir"] = cfg.output_dir.string();
    j["checkpoints"] = cfg.checkpoints;
    j["dump_rounds"] = cfg.dump_rounds;
    return j;
}

} // namespace mocbandit::app
