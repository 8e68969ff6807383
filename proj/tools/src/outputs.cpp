#include "mocbandit/app/outputs.hpp"

#include "mocbandit/app/svg_plot.hpp"
#include "mocbandit/error.hpp"

#include <unistd.h>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace mocbandit::app {

namespace fs = std::filesystem;

namespace {

void put(std::ostream& out, double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, ptr - buf);
}

double parse_double(const std::string& s, const fs::path& path)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError("trace file " + path.string() + ": bad number '" + s + "'");
    return v;
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write " + path.string());
    out << text;
    if (!out)
        throw ConfigError("failed while writing " + path.string());
}

void write_round_log(const fs::path& path, const std::vector<RoundLogEntry>& log)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write " + path.string());
    out << "t,arm,r1,r2,reg1_inc,reg2_inc,pareto_inc\n";
    for (const auto& e : log) {
        out << e.t << ',' << e.arm << ',';
        put(out, e.reward.dominant);
        out << ',';
        put(out, e.reward.nondominant);
        out << ',';
        put(out, e.increment.reg1);
        out << ',';
        put(out, e.increment.reg2);
        out << ',';
        put(out, e.increment.pareto);
        out << '\n';
    }
}

} // namespace

void write_trace_csv(const fs::path& path, const AggregateTrace& tr)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write " + path.string());
    out << kTraceHeader << '\n';
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        out << tr.t[i];
        for (const auto* col : {&tr.reg1_mean, &tr.reg1_std, &tr.reg2_mean, &tr.reg2_std, &tr.pareto_mean,
                                &tr.pareto_std, &tr.reward1_mean, &tr.reward2_mean}) {
            out << ',';
            put(out, (*col)[i]);
        }
        out << '\n';
    }
}

AggregateTrace read_trace_csv(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open trace file " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != kTraceHeader)
        throw ConfigError("trace file " + path.string() + " has an unexpected header");
    AggregateTrace tr;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (cells.size() != 9)
            throw ConfigError("trace file " + path.string() + ": expected 9 columns");
        std::uint64_t t = 0;
        auto [ptr, ec] = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), t);
        if (ec != std::errc{})
            throw ConfigError("trace file " + path.string() + ": bad round '" + cells[0] + "'");
        tr.t.push_back(t);
        std::vector<double>* cols[] = {&tr.reg1_mean, &tr.reg1_std, &tr.reg2_mean, &tr.reg2_std, &tr.pareto_mean,
                                       &tr.pareto_std, &tr.reward1_mean, &tr.reward2_mean};
        for (std::size_t c = 0; c < 8; ++c)
            cols[c]->push_back(parse_double(cells[c + 1], path));
    }
    return tr;
}

std::string display_name(const std::string& algorithm)
{
    static const std::map<std::string, std::string> names{
        {"mocmab", "MOC-MAB"}, {"p_ucb1", "P-UCB1"},   {"s_ucb1", "S-UCB1"},
        {"cp_ucb1", "CP-UCB1"}, {"cs_ucb1", "CS-UCB1"}, {"cd_ucb1", "CD-UCB1"},
    };
    auto it = names.find(algorithm);
    return it == names.end() ? algorithm : it->second;
}

nlohmann::json summarize(const ExperimentResult& result, const ExperimentConfig& cfg, double scale,
                         double wall_clock_seconds)
{
    nlohmann::json j;
    j["experiment"] = to_string(cfg.experiment);
    j["horizon"] = result.horizon;
    j["runs"] = result.runs;
    j["base_seed"] = cfg.base_seed;
    j["scale"] = scale;
    j["m"] = cfg.cells_per_axis;
    j["wall_clock_seconds"] = wall_clock_seconds;
    nlohmann::json algs = nlohmann::json::object();
    for (const auto& p : result.policies) {
        const AggregateTrace& a = p.aggregate;
        const std::size_t last = a.t.size() - 1;
        nlohmann::json e;
        e["final"] = {{"reg1_mean", a.reg1_mean[last]},       {"reg1_std", a.reg1_std[last]},
                      {"reg2_mean", a.reg2_mean[last]},       {"reg2_std", a.reg2_std[last]},
                      {"pareto_mean", a.pareto_mean[last]},   {"pareto_std", a.pareto_std[last]},
                      {"cumrw1_mean", a.reward1_mean[last]}, {"cumrw2_mean", a.reward2_mean[last]}};
        e["sublinearity_exponent"] = {{"reg1", sublinearity_fit(a.t, a.reg1_mean)},
                                      {"reg2", sublinearity_fit(a.t, a.reg2_mean)},
                                      {"pareto", sublinearity_fit(a.t, a.pareto_mean)}};
        e["pareto_above_reg1"] = p.pareto_above_reg1;
        if (p.name == "mocmab") {
            e["envelope_violations"] = {{"reg1", p.envelope_violations_reg1}, {"reg2", p.envelope_violations_reg2}};
            e["increment_bound_violations"] = p.increment_bound_violations;
        }
        algs[p.name] = std::move(e);
    }
    j["algorithms"] = std::move(algs);
    return j;
}

void write_json(const fs::path& path, const nlohmann::json& doc)
{
    write_text(path, doc.dump(2) + "\n");
}

void emit_outputs(const ExperimentResult& result, const ExperimentConfig& cfg, double scale, const fs::path& dir,
                  double wall_clock_seconds)
{
    fs::create_directories(dir);
    for (const auto& p : result.policies) {
        write_trace_csv(dir / ("trace_" + p.name + ".csv"), p.aggregate);
        for (std::size_t r = 0; r < p.round_logs.size(); ++r)
            write_round_log(dir / ("rounds_" + p.name + "_run" + std::to_string(r) + ".csv"), p.round_logs[r]);
    }
    write_json(dir / "summary.json", summarize(result, cfg, scale, wall_clock_seconds));

    struct Figure {
        const char* file;
        const char* title;
        const char* y_label;
        std::vector<double> AggregateTrace::*member;
    };
    const Figure figures[] = {
        {"regret_dominant.svg", "Regret in the dominant objective", "Reg1(t)", &AggregateTrace::reg1_mean},
        {"regret_nondominant.svg", "Regret in the non-dominant objective", "Reg2(t)", &AggregateTrace::reg2_mean},
        {"pareto_regret.svg", "Pareto regret", "PR(t)", &AggregateTrace::pareto_mean},
    };
    for (const auto& fig : figures) {
        PlotSpec spec{fig.title, "round t", fig.y_label, {}};
        std::vector<PlotSeries> series;
        for (const auto& p : result.policies) {
            PlotSeries s{display_name(p.name), {}, p.aggregate.*fig.member};
            for (Round t : p.aggregate.t)
                s.x.push_back(static_cast<double>(t));
            if (spec.x_ticks.empty())
                spec.x_ticks = s.x;
            series.push_back(std::move(s));
        }
        write_text(dir / fig.file, render_line_plot(spec, series));
    }
}

void preflight_output_dir(const fs::path& dir, bool create)
{
    std::error_code ec;
    if (create) {
        fs::create_directories(dir, ec);
        if (ec)
            throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
        if (!fs::is_directory(dir))
            throw ConfigError("output path " + dir.string() + " is not a directory");
        const fs::path probe = dir / ".write_probe";
        {
            std::ofstream out(probe);
            if (!out)
                throw ConfigError("output directory " + dir.string() + " is not writable");
        }
        fs::remove(probe, ec);
        return;
    }

    fs::path existing = dir.empty() ? fs::path(".") : dir;
    while (!fs::exists(existing, ec)) {
        const fs::path parent = existing.has_parent_path() ? existing.parent_path() : fs::path(".");
        if (parent == existing)
            break;
        existing = parent;
    }
    if (fs::exists(existing, ec) && !fs::is_directory(existing, ec))
        throw ConfigError("output path " + existing.string() + " is not a directory");
    if (::access(existing.c_str(), W_OK) != 0)
        throw ConfigError("output directory " + dir.string() + " is not writable");
}

} // namespace mocbandit::app
