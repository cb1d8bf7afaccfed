#include "tsdecomp/reference.hpp"

#include "tsdecomp/errors.hpp"

#include <fmt/format.h>

namespace tsdecomp::reference {

PartialSeries centered_ma(const MonthlySeries& series, int period) {
    if (period < 2 || period % 2 != 0) {
        throw ContractError(fmt::format("centered moving average needs an even period >= 2, got {}", period));
    }
    if (series.size() < static_cast<std::size_t>(period) + 1) {
        throw DataError(fmt::format("series of {} months is too short for period {}", series.size(), period));
    }
    const auto y = series.values();
    const std::size_t half = static_cast<std::size_t>(period) / 2;
    std::vector<std::optional<double>> out(y.size());
    for (std::size_t t = half; t + half < y.size(); ++t) {
        double sum = 0.5 * y[t - half];
        for (std::size_t j = t - half + 1; j < t + half; ++j) {
            sum += y[j];
        }
        sum += 0.5 * y[t + half];
        out[t] = sum / static_cast<double>(period);
    }
    return {series.start(), std::move(out)};
}

OptResult grid_search(const Objective& objective, const Box& box, std::size_t steps_per_axis) {
    detail::check_grid(box, steps_per_axis);
    const std::size_t count = detail::lattice_size(box.dimension(), steps_per_axis);
    OptResult best{std::vector<double>(box.dimension()), 0.0, count, true};
    std::vector<double> point(box.dimension());
    for (std::size_t i = 0; i < count; ++i) {
        detail::lattice_point(box, steps_per_axis, i, point);
        const double v = objective(point);
        if (i == 0 || detail::better(v, point, best.value, best.point)) {
            best.value = v;
            best.point = point;
        }
    }
    return best;
}

std::vector<ForecastRow> method_two(const MonthlySeries& series, MonthStamp eval_start, MonthStamp eval_end) {
    if (eval_end < eval_start) {
        throw RangeError("empty evaluation span");
    }
    std::vector<ForecastRow> rows;
    for (MonthStamp m = eval_start; m <= eval_end; m = month_add(m, 1)) {
        rows.push_back(detail::one_step_row(series, m));
    }
    return rows;
}

} // namespace tsdecomp::reference
