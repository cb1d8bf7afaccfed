#pragma once

#include "tsdecomp/series.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tsdecomp {

/// Smoothing constants. A missing beta drops the slope term, a missing gamma
/// drops the seasonal term.
struct HwParams {
    double alpha = 0.5;
    std::optional<double> beta;
    std::optional<double> gamma;

    /// Throws ContractError if any present constant lies outside [0, 1].
    void validate() const;

    friend bool operator==(const HwParams&, const HwParams&) = default;
};

/// Filter state. `seasonal` is indexed by phase (SeasonalFigures::phase_of).
struct HwState {
    double level = 0.0;
    std::optional<double> slope;
    std::optional<std::vector<double>> seasonal;

    friend bool operator==(const HwState&, const HwState&) = default;
};

struct HwModel {
    HwParams params;
    int period = 12;
    HwState initial;
    HwState final_state;
    PartialSeries one_step_predictions;
    double sse = 0.0;
    std::pair<MonthStamp, MonthStamp> training_span;
};

struct Forecast {
    MonthStamp origin;   // last training month
    int horizon = 0;
    std::vector<double> values;

    MonthStamp stamp_at(std::size_t step_index) const { return month_add(origin, static_cast<long>(step_index) + 1); }
};

/// Months consumed by initialization before the first one-step prediction.
std::size_t hw_burn_in(int period, bool with_seasonal);

/// Starting state.
///  seasonal:   figures of a classical decomposition of the first two cycles;
///              level = mean of cycle 1; slope = (mean cycle 2 - mean cycle 1) / period.
///  non-seasonal: level = y[0]; slope = y[1] - y[0].
/// Throws DataError if the series is shorter than 2*period (seasonal) or 2.
HwState hw_init(const MonthlySeries& series, int period, bool with_trend, bool with_seasonal);

/// Runs the additive Holt-Winters recursions over `series`, starting after the
/// burn-in, and records every one-step prediction and their SSE.
HwModel hw_filter(const MonthlySeries& series, const HwParams& params, const HwState& init, int period);

/// Minimizes one-step SSE over [0,1]^d: a 6-per-axis grid seeds a
/// Nelder-Mead refinement.
HwModel hw_fit(const MonthlySeries& series, int period, bool with_trend, bool with_seasonal);

/// Point forecasts for steps 1..horizon after the training span.
Forecast hw_forecast(const HwModel& model, int horizon);

/// Seed lattice resolution used by hw_fit.
inline constexpr std::size_t kHwGridSteps = 6;

} // namespace tsdecomp
