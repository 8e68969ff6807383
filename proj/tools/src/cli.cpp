#include "mocbandit/app/cli.hpp"

#include "mocbandit/app/outputs.hpp"
#include "mocbandit/app/plan.hpp"
#include "mocbandit/error.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <thread>

namespace mocbandit::app {

namespace fs = std::filesystem;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Options {
    fs::path config;
    std::optional<std::uint64_t> seed;
    std::optional<fs::path> out;
    std::size_t jobs = 0;
};

ExperimentConfig load(const Options& opt)
{
    ExperimentConfig cfg = parse_config(opt.config);
    if (opt.seed) {
        cfg.base_seed = *opt.seed;
    }
    if (opt.out)
        cfg.output_dir = *opt.out;
    return cfg;
}

void do_single(const ExperimentConfig& cfg, double scale, const fs::path& dir, std::size_t jobs)
{
    const auto start = std::chrono::steady_clock::now();
    const ExperimentResult result = run_experiment(build_plan(cfg, scale, jobs));
    emit_outputs(result, cfg, scale, dir, seconds_since(start));
}

int run_validate(const Options& opt)
{
    const ExperimentConfig cfg = load(opt);
    (void)environment_factory(cfg);
    preflight_output_dir(cfg.output_dir, false);
    std::cout << "config OK: " << to_string(cfg.experiment) << ", T=" << cfg.horizon << ", runs=" << cfg.runs
              << ", m=" << cfg.cells_per_axis << "\n";
    return kSuccess;
}

void write_sweep(const ExperimentConfig& cfg, std::size_t jobs)
{
    preflight_output_dir(cfg.output_dir, true);
    (void)environment_factory(cfg);
    write_json(cfg.output_dir / "resolved_config.json", to_json(cfg));
    SweepResult sweep;
    for (double scale : sweep_scales()) {
        const auto start = std::chrono::steady_clock::now();
        ExperimentResult result = run_experiment(build_plan(cfg, scale, jobs));
        emit_outputs(result, cfg, scale, cfg.output_dir / scale_dir_name(scale), seconds_since(start));
        sweep.by_scale.emplace_back(scale, std::move(result));
    }
    write_json(cfg.output_dir / "sweep_summary.json", sweep_summary(sweep));
}

int run_run(const Options& opt)
{
    const ExperimentConfig cfg = load(opt);
    const std::size_t jobs = resolve_jobs(opt.jobs);
    if (cfg.scale_sweep) {
        write_sweep(cfg, jobs);
        return kSuccess;
    }
    preflight_output_dir(cfg.output_dir, true);
    (void)environment_factory(cfg);
    write_json(cfg.output_dir / "resolved_config.json", to_json(cfg));
    do_single(cfg, cfg.scale, cfg.output_dir, jobs);
    return kSuccess;
}

int run_sweep_cmd(const Options& opt)
{
    write_sweep(load(opt), resolve_jobs(opt.jobs));
    return kSuccess;
}

} // namespace

double SweepResult::best_scale(const std::string& algorithm) const
{
    if (by_scale.empty())
        throw InvalidInput("empty sweep");
    double best = by_scale.front().first;
    double best_reg = std::numeric_limits<double>::infinity();
    for (const auto& [scale, result] : by_scale) {
        const double reg = result.policy(algorithm).aggregate.reg1_mean.back();
        if (reg < best_reg) {
            best_reg = reg;
            best = scale;
        }
    }
    return best;
}

const ExperimentResult& SweepResult::at(double scale) const
{
    for (const auto& [s, r] : by_scale)
        if (s == scale)
            return r;
    throw InvalidInput("scale not in sweep");
}

SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t jobs)
{
    SweepResult sweep;
    for (double scale : sweep_scales())
        sweep.by_scale.emplace_back(scale, run_experiment(build_plan(cfg, scale, jobs)));
    return sweep;
}

std::string scale_dir_name(double scale)
{
    if (scale == 1.0)
        return "scale_1";
    return "scale_1_" + std::to_string(static_cast<long long>(std::llround(1.0 / scale)));
}

nlohmann::json sweep_summary(const SweepResult& sweep)
{
    nlohmann::json j;
    nlohmann::json per_scale = nlohmann::json::array();
    for (const auto& [scale, result] : sweep.by_scale) {
        nlohmann::json e;
        e["scale"] = scale;
        e["directory"] = scale_dir_name(scale);
        for (const auto& p : result.policies)
            e["final"][p.name] = {{"reg1_mean", p.aggregate.reg1_mean.back()},
                                  {"reg2_mean", p.aggregate.reg2_mean.back()},
                                  {"pareto_mean", p.aggregate.pareto_mean.back()},
                                  {"cumrw1_mean", p.aggregate.reward1_mean.back()},
                                  {"cumrw2_mean", p.aggregate.reward2_mean.back()}};
        per_scale.push_back(std::move(e));
    }
    j["scales"] = std::move(per_scale);
    if (!sweep.by_scale.empty()) {
        for (const auto& p : sweep.by_scale.front().second.policies)
            j["dominant_regret_minimizer"][p.name] = sweep.best_scale(p.name);
    }
    return j;
}

std::size_t resolve_jobs(std::size_t flag_value)
{
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("MOC_BANDIT_JOBS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int cli_main(int argc, char** argv)
{
    CLI::App app{"Multi-objective contextual bandit simulator"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t seed = 0;
    std::string out;

    const auto add_common = [&](CLI::App* sub, bool with_out) {
        sub->add_option("--config", opt.config, "experiment config (JSON)")->required();
        if (with_out) {
            sub->add_option("--seed", seed, "override base_seed");
            sub->add_option("--out", out, "override output_dir");
            sub->add_option("--jobs", opt.jobs, "worker threads (default: MOC_BANDIT_JOBS or processor count)");
        }
    };
    CLI::App* run = app.add_subcommand("run", "run one experiment");
    add_common(run, true);
    CLI::App* sweep = app.add_subcommand("sweep", "run the uncertainty-scale sweep");
    add_common(sweep, true);
    CLI::App* validate = app.add_subcommand("validate", "parse and pre-flight a config without simulating");
    add_common(validate, false);
    validate->add_option("--out", out, "override output_dir");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }
    if (run->count("--seed") || sweep->count("--seed"))
        opt.seed = seed;
    if (!out.empty())
        opt.out = fs::path(out);

    try {
        if (*validate)
            return run_validate(opt);
        if (*sweep)
            return run_sweep_cmd(opt);
        return run_run(opt);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return kRuntimeError;
    }
}

} // namespace mocbandit::app
