#include "mocbandit/replay.hpp"

#include "mocbandit/error.hpp"
#include "mocbandit/partition.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace mocbandit {

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

std::string trim(std::string s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && s[i] == ' ')
        ++i;
    return s.substr(i);
}

double parse_number(const std::string& text, std::size_t line_no)
{
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("replay file line " + std::to_string(line_no) + ": '" + text + "' is not a number");
    return v;
}

} // namespace

std::vector<ReplayRecord> load_replay_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open replay file " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("replay file " + path.string() + " is empty");
    const auto header = split(trim(line));
    if (header.size() < 2 || trim(header.back()) != "click")
        throw ConfigError("replay header must be x1,...,xd,click");
    const std::size_t dims = header.size() - 1;
    for (std::size_t i = 0; i < dims; ++i)
        if (trim(header[i]) != "x" + std::to_string(i + 1))
            throw ConfigError("replay header column " + std::to_string(i + 1) + " must be x" + std::to_string(i + 1));

    std::vector<ReplayRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty())
            continue;
        const auto cells = split(line);
        if (cells.size() != dims + 1)
            throw ConfigError("replay file line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                              " fields, expected " + std::to_string(dims + 1));
        ReplayRecord rec;
        rec.context.reserve(dims);
        for (std::size_t i = 0; i < dims; ++i) {
            const double v = parse_number(trim(cells[i]), line_no);
            if (!(v >= 0.0 && v <= 1.0))
                throw ConfigError("replay file line " + std::to_string(line_no) + ": feature outside [0,1]");
            rec.context.push_back(v);
        }
        const double click = parse_number(trim(cells[dims]), line_no);
        if (click != 0.0 && click != 1.0)
            throw ConfigError("replay file line " + std::to_string(line_no) + ": click must be 0 or 1");
        rec.click = click == 1.0;
        records.push_back(std::move(rec));
    }
    return records;
}

void write_replay_csv(const std::filesystem::path& path, const std::vector<ReplayRecord>& records)
{
    if (records.empty())
        throw InvalidInput("nothing to write");
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write replay file " + path.string());
    const std::size_t dims = records.front().context.size();
    for (std::size_t i = 0; i < dims; ++i)
        out << 'x' << (i + 1) << ',';
    out << "click\n";
    char buf[64];
    for (const auto& r : records) {
        for (double v : r.context) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
            out.write(buf, ptr - buf);
            out << ',';
        }
        out << (r.click ? 1 : 0) << '\n';
    }
}

ClickModel linear_click_model(double base_rate)
{
    if (!(base_rate >= 0.0 && base_rate <= 0.5))
        throw InvalidInput("linear click model base rate must lie in [0, 0.5]");
    return [base_rate](const Context& x) { return base_rate * (1.0 + x[0]); };
}

ClickModel estimate_click_model(const std::vector<ReplayRecord>& records, std::size_t bins)
{
    if (records.empty())
        throw InvalidInput("cannot estimate a click model from an empty log");
    const PartitionSpec grid(records.front().context.size(), bins);
    std::vector<double> clicks(grid.num_cells(), 0.0);
    std::vector<double> shown(grid.num_cells(), 0.0);
    double total = 0.0;
    for (const auto& r : records) {
        const CellIndex c = locate(Context(r.context), grid);
        shown[c.flat] += 1.0;
        clicks[c.flat] += r.click ? 1.0 : 0.0;
        total += r.click ? 1.0 : 0.0;
    }
    const double overall = total / static_cast<double>(records.size());
    std::vector<double> rate(grid.num_cells(), overall);
    for (std::size_t i = 0; i < rate.size(); ++i)
        if (shown[i] > 0.0)
            rate[i] = clicks[i] / shown[i];
    return [grid, rate = std::move(rate)](const Context& x) { return rate[locate(x, grid).flat]; };
}

ClickSurrogate make_click_surrogate(std::size_t rounds, std::size_t dims, double mean_rate, std::uint64_t seed)
{
    if (rounds == 0 || dims == 0)
        throw InvalidInput("surrogate needs at least one round and one feature");
    // E[1 + x_1] = 1.5 under uniform contexts
    ClickSurrogate out{{}, linear_click_model(mean_rate / 1.5)};
    Engine rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    out.records.reserve(rounds);
    for (std::size_t i = 0; i < rounds; ++i) {
        ReplayRecord rec;
        rec.context.resize(dims);
        for (auto& c : rec.context)
            c = u(rng);
        rec.click = u(rng) < out.model(Context(rec.context));
        out.records.push_back(std::move(rec));
    }
    return out;
}

ReplayEnvironment::ReplayEnvironment(std::vector<ReplayRecord> records, ClickModel model, Round horizon)
    : records_(std::move(records)), model_(std::move(model))
{
    if (records_.empty())
        throw ConfigError("replay log is empty");
    if (records_.size() < horizon)
        throw ConfigError("replay log has " + std::to_string(records_.size()) + " records, horizon needs " +
                          std::to_string(horizon));
    if (!model_)
        throw ConfigError("replay environment needs a click model");
    dims_ = records_.front().context.size();
    for (const auto& r : records_)
        if (r.context.size() != dims_)
            throw ConfigError("replay records have inconsistent dimensions");
}

Context ReplayEnvironment::next_context(Round t)
{
    if (t == 0 || t > records_.size())
        throw ConfigError("replay log exhausted at round " + std::to_string(t));
    current_ = static_cast<std::size_t>(t - 1);
    return Context(records_[current_].context);
}

RewardVector ReplayEnvironment::sample_reward(const Context&, ArmId arm, RewardStream&) const
{
    if (arm == kDisplay)
        return {records_[current_].click ? 1.0 : 0.0, 0.0};
    if (arm == kSkip)
        return {0.0, 1.0};
    throw InvalidInput("arm id out of range");
}

ExpectedRewards ReplayEnvironment::true_means(const Context& x) const
{
    return {{model_(x), 0.0}, {0.0, 1.0}};
}

} // namespace mocbandit
