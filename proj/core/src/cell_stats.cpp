#include "mocbandit/cell_stats.hpp"

#include "mocbandit/error.hpp"

#include <limits>

namespace mocbandit {

CellStats update_stats(const CellStats& s, const RewardVector& r)
{
    require_finite(r);
    const double n = static_cast<double>(s.count);
    CellStats out;
    out.mean_dominant = (s.mean_dominant * n + r.dominant) / (n + 1.0);
    out.mean_nondominant = (s.mean_nondominant * n + r.nondominant) / (n + 1.0);
    out.count = s.count + 1;
    return out;
}

StatsTable::StatsTable(std::size_t num_cells, std::size_t num_arms) : cells_(num_cells), arms_(num_arms)
{
    if (cells_ == 0 || arms_ == 0)
        throw InvalidInput("statistics table needs at least one cell and one arm");
    if (cells_ > std::numeric_limits<std::size_t>::max() / arms_)
        throw InvalidInput("statistics table is too large to index");
    sparse_mode_ = cells_ * arms_ > kDenseLimit;
    if (!sparse_mode_)
        dense_.assign(cells_ * arms_, CellStats{});
}

std::size_t StatsTable::key(CellIndex cell, ArmId arm) const
{
    if (cell.flat >= cells_ || arm >= arms_)
        throw InvalidInput("statistics lookup out of range");
    return cell.flat * arms_ + arm;
}

const CellStats& StatsTable::at(CellIndex cell, ArmId arm) const
{
    static const CellStats kEmpty{};
    const std::size_t k = key(cell, arm);
    if (!sparse_mode_)
        return dense_[k];
    auto it = sparse_.find(k);
    return it == sparse_.end() ? kEmpty : it->second;
}

void StatsTable::record(CellIndex cell, ArmId arm, const RewardVector& r)
{
    const std::size_t k = key(cell, arm);
    CellStats& slot = sparse_mode_ ? sparse_[k] : dense_[k];
    slot = update_stats(slot, r);
    ++total_;
}

void StatsTable::clear()
{
    total_ = 0;
    if (sparse_mode_)
        sparse_.clear();
    else
        dense_.assign(cells_ * arms_, CellStats{});
}

} // namespace mocbandit
