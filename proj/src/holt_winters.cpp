#include "tsdecomp/holt_winters.hpp"

#include "tsdecomp/decomposition.hpp"
#include "tsdecomp/errors.hpp"
#include "tsdecomp/optimizer.hpp"

#include <fmt/format.h>

namespace tsdecomp {

void HwParams::validate() const {
    auto check = [](const char* name, double v) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ContractError(fmt::format("{} = {} outside [0, 1]", name, v));
        }
    };
    check("alpha", alpha);
    if (beta) {
        check("beta", *beta);
    }
    if (gamma) {
        check("gamma", *gamma);
    }
}

std::size_t hw_burn_in(int period, bool with_seasonal) {
    return with_seasonal ? 2 * static_cast<std::size_t>(period) : 1;
}

HwState hw_init(const MonthlySeries& series, int period, bool with_trend, bool with_seasonal) {
    HwState state;
    if (!with_seasonal) {
        if (series.size() < 2) {
            throw DataError(fmt::format("need at least 2 months to initialise, got {}", series.size()));
        }
        state.level = series[0];
        if (with_trend) {
            state.slope = series[1] - series[0];
        }
        return state;
    }

    const auto p = static_cast<std::size_t>(period);
    if (period < 2 || series.size() < 2 * p) {
        throw DataError(fmt::format("seasonal initialisation needs {} months, got {}", 2 * period, series.size()));
    }
    auto head = series.window(series.start(), series.stamp_at(2 * p - 1));
    auto figures = decompose_additive(head, period).figures;

    double cycle1 = 0.0;
    double cycle2 = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
        cycle1 += series[i];
        cycle2 += series[p + i];
    }
    cycle1 /= static_cast<double>(p);
    cycle2 /= static_cast<double>(p);

    state.level = cycle1;
    if (with_trend) {
        state.slope = (cycle2 - cycle1) / static_cast<double>(p);
    }
    state.seasonal = std::vector<double>(figures.by_phase().begin(), figures.by_phase().end());
    return state;
}

HwModel hw_filter(const MonthlySeries& series, const HwParams& params, const HwState& init, int period) {
    params.validate();
    if (params.beta.has_value() != init.slope.has_value()) {
        throw ContractError("initial slope must be present exactly when beta is");
    }
    if (params.gamma.has_value() != init.seasonal.has_value()) {
        throw ContractError("initial seasonal state must be present exactly when gamma is");
    }
    if (init.seasonal && init.seasonal->size() != static_cast<std::size_t>(period)) {
        throw ContractError(fmt::format("seasonal state has {} entries, period is {}", init.seasonal->size(), period));
    }

    const bool seasonal = params.gamma.has_value();
    const double alpha = params.alpha;
    const double beta = params.beta.value_or(0.0);
    const double gamma = params.gamma.value_or(0.0);

    double level = init.level;
    double slope = init.slope.value_or(0.0);
    std::vector<double> season = init.seasonal.value_or(std::vector<double>{});

    std::vector<std::optional<double>> predictions(series.size());
    double sse = 0.0;
    for (std::size_t t = hw_burn_in(period, seasonal); t < series.size(); ++t) {
        const std::size_t phase = seasonal ? SeasonalFigures::phase_of(series.stamp_at(t), period) : 0;
        const double s_prev = seasonal ? season[phase] : 0.0;
        const double y = series[t];
        const double pred = level + slope + s_prev;
        predictions[t] = pred;
        sse += (pred - y) * (pred - y);

        const double new_level = alpha * (y - s_prev) + (1.0 - alpha) * (level + slope);
        if (params.beta) {
            slope = beta * (new_level - level) + (1.0 - beta) * slope;
        }
        if (seasonal) {
            season[phase] = gamma * (y - new_level) + (1.0 - gamma) * s_prev;
        }
        level = new_level;
    }

    HwState final_state{level, init.slope ? std::optional<double>(slope) : std::nullopt,
                        init.seasonal ? std::optional<std::vector<double>>(std::move(season)) : std::nullopt};
    return {params,
            period,
            init,
            std::move(final_state),
            PartialSeries(series.start(), std::move(predictions)),
            sse,
            {series.start(), series.end()}};
}

namespace {

HwParams params_from(std::span<const double> x, bool with_trend, bool with_seasonal) {
    HwParams p;
    std::size_t i = 0;
    p.alpha = x[i++];
    if (with_trend) {
        p.beta = x[i++];
    }
    if (with_seasonal) {
        p.gamma = x[i++];
    }
    return p;
}

} // namespace

HwModel hw_fit(const MonthlySeries& series, int period, bool with_trend, bool with_seasonal) {
    const HwState init = hw_init(series, period, with_trend, with_seasonal);
    const std::size_t dim = 1 + (with_trend ? 1 : 0) + (with_seasonal ? 1 : 0);
    const Box box = Box::unit(dim);

    Objective sse = [&](std::span<const double> x) {
        return hw_filter(series, params_from(x, with_trend, with_seasonal), init, period).sse;
    };

    const OptResult seed = grid_search(sse, box, kHwGridSteps);
    const OptResult refined = nelder_mead(sse, seed.point, box);
    const auto& best = detail::better(refined.value, refined.point, seed.value, seed.point) ? refined.point : seed.point;
    return hw_filter(series, params_from(best, with_trend, with_seasonal), init, period);
}

Forecast hw_forecast(const HwModel& model, int horizon) {
    if (horizon < 1) {
        throw ContractError(fmt::format("forecast horizon must be >= 1, got {}", horizon));
    }
    const auto& st = model.final_state;
    const MonthStamp origin = model.training_span.second;
    Forecast fc{origin, horizon, {}};
    fc.values.reserve(static_cast<std::size_t>(horizon));
    for (int h = 1; h <= horizon; ++h) {
        double v = st.level + h * st.slope.value_or(0.0);
        if (st.seasonal) {
            v += (*st.seasonal)[SeasonalFigures::phase_of(month_add(origin, h), model.period)];
        }
        fc.values.push_back(v);
    }
    return fc;
}

} // namespace tsdecomp
