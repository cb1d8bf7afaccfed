#pragma once

#include "tsdecomp/series.hpp"

#include <vector>

namespace tsdecomp {

/// Additive seasonal offsets, one per phase of the period. For period 12 the
/// phase of a month is its calendar month minus one, so figure(stamp) is the
/// offset for that calendar month.
class SeasonalFigures {
public:
    explicit SeasonalFigures(std::vector<double> by_phase);

    int period() const noexcept { return static_cast<int>(by_phase_.size()); }
    std::span<const double> by_phase() const noexcept { return by_phase_; }

    double figure(MonthStamp stamp) const { return by_phase_[phase_of(stamp, period())]; }

    /// Phase of a month for a given period, anchored so that January of any
    /// year has phase 0 when period divides 12.
    static std::size_t phase_of(MonthStamp stamp, int period);

private:
    std::vector<double> by_phase_;
};

struct Decomposition {
    MonthlySeries source;
    PartialSeries trend;
    SeasonalFigures figures;
    MonthlySeries seasonal;
    PartialSeries random;
};

/// 2xP centered moving average for even P. Position t is defined iff
/// P/2 <= t <= n-1-P/2. Throws DataError when the series has fewer than
/// P+1 values and ContractError for odd or non-positive P.
PartialSeries centered_ma(const MonthlySeries& series, int period);

/// Per-phase mean of (series - trend) over defined positions, re-centred to sum to zero.
SeasonalFigures seasonal_figures(const MonthlySeries& series, const PartialSeries& trend, int period);

/// Classical additive decomposition y = trend + seasonal + random.
/// Requires an even period and at least two full cycles of data.
Decomposition decompose_additive(const MonthlySeries& series, int period);

/// trend + seasonal + random where all three are defined.
PartialSeries recompose(const Decomposition& d);

} // namespace tsdecomp
