#include "tsdecomp/evaluation.hpp"

#include "tsdecomp/decomposition.hpp"
#include "tsdecomp/errors.hpp"
#include "tsdecomp/holt_winters.hpp"

#include <algorithm>
#include <exception>

#include <fmt/format.h>

namespace tsdecomp {

double error_pct(double actual, double forecast) {
    if (actual == 0.0) {
        throw DomainError("percentage error undefined for an actual value of 0");
    }
    return (forecast - actual) / actual * 100.0;
}

std::vector<ForecastRow> method_one(const MonthlySeries& series, MonthStamp train_end, int horizon) {
    if (horizon < 1) {
        throw ContractError(fmt::format("horizon must be >= 1, got {}", horizon));
    }
    const MonthStamp last = month_add(train_end, horizon);
    if (!series.contains(train_end) || !series.contains(last)) {
        throw RangeError(fmt::format("forecasting {} months after {} needs data through {}; series covers {}..{}",
                                     horizon, train_end.to_string(), last.to_string(), series.start().to_string(),
                                     series.end().to_string()));
    }
    auto model = hw_fit(series.window(series.start(), train_end), kMonthsPerYear, true, true);
    auto fc = hw_forecast(model, horizon);

    std::vector<ForecastRow> rows;
    rows.reserve(fc.values.size());
    for (std::size_t h = 0; h < fc.values.size(); ++h) {
        const MonthStamp stamp = fc.stamp_at(h);
        const double actual = series.value_at(stamp);
        rows.push_back({stamp, actual, fc.values[h], error_pct(actual, fc.values[h])});
    }
    return rows;
}

namespace detail {

ForecastRow one_step_row(const MonthlySeries& series, MonthStamp target) {
    if (!series.contains(target) || target == series.start()) {
        throw RangeError(fmt::format("no training history before {}", target.to_string()));
    }
    auto model = hw_fit(series.window(series.start(), month_add(target, -1)), kMonthsPerYear, true, true);
    const double forecast = hw_forecast(model, 1).values.front();
    const double actual = series.value_at(target);
    return {target, actual, forecast, error_pct(actual, forecast)};
}

} // namespace detail

std::vector<ForecastRow> method_two(const MonthlySeries& series, MonthStamp eval_start, MonthStamp eval_end) {
    if (eval_end < eval_start) {
        throw RangeError(fmt::format("evaluation span {}..{} is empty", eval_start.to_string(), eval_end.to_string()));
    }
    if (!series.contains(eval_start) || !series.contains(eval_end)) {
        throw RangeError(fmt::format("evaluation span {}..{} outside series {}..{}", eval_start.to_string(),
                                     eval_end.to_string(), series.start().to_string(), series.end().to_string()));
    }
    const long count = months_between(eval_start, eval_end) + 1;
    std::vector<std::optional<ForecastRow>> rows(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < count; ++k) {
        try {
            rows[static_cast<std::size_t>(k)] = detail::one_step_row(series, month_add(eval_start, k));
        } catch (...) {
            errors[static_cast<std::size_t>(k)] = std::current_exception();
        }
    }
    // report the earliest failing month, as a sequential run would
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<ForecastRow> out;
    out.reserve(rows.size());
    for (auto& r : rows) {
        out.push_back(*r);
    }
    return out;
}

std::vector<ComponentRow> method_three(const MonthlySeries& series, MonthStamp train_end, int eval_months) {
    constexpr int half = kMonthsPerYear / 2;
    if (eval_months < 1) {
        throw ContractError(fmt::format("eval_months must be >= 1, got {}", eval_months));
    }
    const MonthStamp eval_last = month_add(train_end, eval_months);
    if (!series.contains(train_end) || !series.contains(month_add(eval_last, half))) {
        throw RangeError(fmt::format("actual trend through {} needs data through {}; series covers {}..{}",
                                     eval_last.to_string(), month_add(eval_last, half).to_string(),
                                     series.start().to_string(), series.end().to_string()));
    }

    const auto training = decompose_additive(series.window(series.start(), train_end), kMonthsPerYear);
    const auto full = decompose_additive(series, kMonthsPerYear);

    // The training trend stops `half` months before train_end, so forecast
    // half + eval_months steps and keep the tail.
    const auto trend_series = training.trend.defined_span();
    const auto trend_model = hw_fit(trend_series, kMonthsPerYear, true, false);
    const auto fc = hw_forecast(trend_model, half + eval_months);

    std::vector<ComponentRow> rows;
    rows.reserve(static_cast<std::size_t>(eval_months));
    for (int k = 0; k < eval_months; ++k) {
        const MonthStamp stamp = month_add(train_end, k + 1);
        const auto actual_trend = full.trend.value_at(stamp);
        if (!actual_trend) {
            throw DataError(fmt::format("full-series trend undefined at {}", stamp.to_string()));
        }
        const double actual_seasonal = full.figures.figure(stamp);
        const double forecast_trend = fc.values[static_cast<std::size_t>(half + k)];
        const double past_seasonal = training.figures.figure(stamp);
        const double actual_sum = *actual_trend + actual_seasonal;
        const double forecast_sum = forecast_trend + past_seasonal;
        rows.push_back({.stamp = stamp,
                        .actual_trend = *actual_trend,
                        .actual_seasonal = actual_seasonal,
                        .actual_sum = actual_sum,
                        .forecast_trend = forecast_trend,
                        .past_seasonal = past_seasonal,
                        .forecast_sum = forecast_sum,
                        .error_pct = error_pct(actual_sum, forecast_sum)});
    }
    return rows;
}

std::vector<OverlapRow> method_four(const MonthlySeries& series, MonthSpan window1, MonthSpan window2) {
    const auto d1 = decompose_additive(series.window(window1.first, window1.second), kMonthsPerYear);
    const auto d2 = decompose_additive(series.window(window2.first, window2.second), kMonthsPerYear);

    const MonthStamp first = std::max(d1.trend.start(), d2.trend.start());
    const MonthStamp last = std::min(d1.trend.end(), d2.trend.end());
    std::vector<OverlapRow> rows;
    for (MonthStamp m = first; m <= last; m = month_add(m, 1)) {
        const auto t1 = d1.trend.value_at(m);
        const auto t2 = d2.trend.value_at(m);
        if (!t1 || !t2) {
            continue;
        }
        const double seasonal1 = d1.figures.figure(m);
        const double seasonal2 = d2.figures.figure(m);
        const double sum1 = *t1 + seasonal1;
        const double sum2 = *t2 + seasonal2;
        rows.push_back({.stamp = m,
                        .trend1 = *t1,
                        .seasonal1 = seasonal1,
                        .sum1 = sum1,
                        .trend2 = *t2,
                        .seasonal2 = seasonal2,
                        .sum2 = sum2,
                        .variation_pct = error_pct(sum1, sum2)});
    }
    if (rows.empty()) {
        throw DataError(fmt::format("windows {}..{} and {}..{} share no month with a defined trend",
                                    window1.first.to_string(), window1.second.to_string(), window2.first.to_string(),
                                    window2.second.to_string()));
    }
    return rows;
}

} // namespace tsdecomp
