#include "tsdecomp/decomposition.hpp"

#include "tsdecomp/errors.hpp"

#include <fmt/format.h>

namespace tsdecomp {

SeasonalFigures::SeasonalFigures(std::vector<double> by_phase) : by_phase_(std::move(by_phase)) {
    if (by_phase_.empty()) {
        throw ContractError("seasonal figures need a positive period");
    }
}

std::size_t SeasonalFigures::phase_of(MonthStamp stamp, int period) {
    long p = period;
    return static_cast<std::size_t>(((stamp.ordinal() % p) + p) % p);
}

namespace {

void check_period(const MonthlySeries& series, int period) {
    if (period < 2 || period % 2 != 0) {
        throw ContractError(fmt::format("centered moving average needs an even period >= 2, got {}", period));
    }
    if (series.size() < static_cast<std::size_t>(period) + 1) {
        throw DataError(fmt::format("series of {} months is too short for period {} (need {})",
                                    series.size(), period, period + 1));
    }
}

} // namespace

PartialSeries centered_ma(const MonthlySeries& series, int period) {
    check_period(series, period);
    const auto y = series.values();
    const long n = static_cast<long>(y.size());
    const long half = period / 2;
    std::vector<std::optional<double>> out(y.size());

    // Each position is summed independently, left to right, so that any two
    // windows of the same data produce bit-identical values where they overlap.
#pragma omp parallel for schedule(static) if (n > 4096)
    for (long t = half; t < n - half; ++t) {
        double sum = 0.5 * y[t - half];
        for (long j = t - half + 1; j < t + half; ++j) {
            sum += y[j];
        }
        sum += 0.5 * y[t + half];
        out[t] = sum / static_cast<double>(period);
    }
    return {series.start(), std::move(out)};
}

SeasonalFigures seasonal_figures(const MonthlySeries& series, const PartialSeries& trend, int period) {
    if (period < 1) {
        throw ContractError("period must be positive");
    }
    if (trend.start() != series.start() || trend.size() != series.size()) {
        throw ContractError("trend must cover the same months as the series");
    }
    const auto p = static_cast<std::size_t>(period);
    std::vector<double> sums(p, 0.0);
    std::vector<std::size_t> counts(p, 0);
    for (std::size_t t = 0; t < series.size(); ++t) {
        if (!trend[t]) {
            continue;
        }
        auto phase = SeasonalFigures::phase_of(series.stamp_at(t), period);
        sums[phase] += series[t] - *trend[t];
        ++counts[phase];
    }
    double grand = 0.0;
    for (std::size_t k = 0; k < p; ++k) {
        if (counts[k] == 0) {
            throw DataError(fmt::format("no detrended observation for seasonal phase {}", k + 1));
        }
        sums[k] /= static_cast<double>(counts[k]);
        grand += sums[k];
    }
    grand /= static_cast<double>(p);
    for (auto& s : sums) {
        s -= grand;
    }
    return SeasonalFigures(std::move(sums));
}

Decomposition decompose_additive(const MonthlySeries& series, int period) {
    check_period(series, period);
    if (series.size() < 2 * static_cast<std::size_t>(period)) {
        throw DataError(fmt::format("decomposition needs at least {} months, got {}", 2 * period,
                                    series.size()));
    }
    auto trend = centered_ma(series, period);
    auto figures = seasonal_figures(series, trend, period);

    std::vector<double> seasonal(series.size());
    std::vector<std::optional<double>> random(series.size());
    for (std::size_t t = 0; t < series.size(); ++t) {
        seasonal[t] = figures.figure(series.stamp_at(t));
        if (trend[t]) {
            random[t] = series[t] - *trend[t] - seasonal[t];
        }
    }
    return {series, std::move(trend), std::move(figures), MonthlySeries(series.start(), std::move(seasonal)),
            PartialSeries(series.start(), std::move(random))};
}

PartialSeries recompose(const Decomposition& d) {
    std::vector<std::optional<double>> out(d.source.size());
    for (std::size_t t = 0; t < out.size(); ++t) {
        if (d.trend[t] && d.random[t]) {
            out[t] = *d.trend[t] + d.seasonal[t] + *d.random[t];
        }
    }
    return {d.source.start(), std::move(out)};
}

} // namespace tsdecomp
