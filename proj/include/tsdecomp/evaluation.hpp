#pragma once

#include "tsdecomp/series.hpp"

#include <utility>
#include <vector>

namespace tsdecomp {

struct ForecastRow {
    MonthStamp stamp;
    double actual;
    double forecast;
    double error_pct;
};

/// Trend + seasonal comparison between a full-series decomposition (actual)
/// and a trend forecast from a shorter training window.
struct ComponentRow {
    MonthStamp stamp;
    double actual_trend;
    double actual_seasonal;
    double actual_sum;
    double forecast_trend;
    double past_seasonal;
    double forecast_sum;
    double error_pct;
};

/// Trend + seasonal of the same month under two decomposition windows.
struct OverlapRow {
    MonthStamp stamp;
    double trend1;
    double seasonal1;
    double sum1;
    double trend2;
    double seasonal2;
    double sum2;
    double variation_pct;
};

using MonthSpan = std::pair<MonthStamp, MonthStamp>;

/// (forecast - actual) / actual * 100. Throws DomainError when actual == 0.
double error_pct(double actual, double forecast);

/// Fixed origin: fit HW(trend, additive seasonal) on [series.start, train_end]
/// once and forecast `horizon` months.
std::vector<ForecastRow> method_one(const MonthlySeries& series, MonthStamp train_end, int horizon);

/// Rolling origin: for each month m in [eval_start, eval_end], refit on
/// [series.start, m - 1] and forecast one step. Months are processed in
/// parallel; rows come back in calendar order.
std::vector<ForecastRow> method_two(const MonthlySeries& series, MonthStamp eval_start, MonthStamp eval_end);

/// Trend-component forecast: decompose [series.start, train_end], fit Holt's
/// trend-only model to its (truncated) trend, and compare trend forecast plus
/// training-window seasonal figures with the full-series decomposition for the
/// `eval_months` months after train_end.
std::vector<ComponentRow> method_three(const MonthlySeries& series, MonthStamp train_end, int eval_months);

/// Decompose two windows independently and compare trend + seasonal on every
/// month where both trends are defined.
std::vector<OverlapRow> method_four(const MonthlySeries& series, MonthSpan window1, MonthSpan window2);

/// Decomposition period used by all four methods.
inline constexpr int kMonthsPerYear = 12;

namespace detail {
ForecastRow one_step_row(const MonthlySeries& series, MonthStamp target);
}

} // namespace tsdecomp
