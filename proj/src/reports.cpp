#include "text_format.hpp"
#include "tsdecomp/io.hpp"

#include <cmath>
#include <string_view>

#include "json.hpp"

namespace tsdecomp {

namespace detail {

double rounded(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    const double r = std::round(v * scale) / scale;
    return r == 0.0 ? 0.0 : r;
}

} // namespace detail

namespace {

constexpr int kLevelDecimals = 6;
constexpr int kPercentDecimals = 2;

struct Field {
    std::string_view name;
    double value;
    int decimals;
};

std::vector<Field> fields(const ForecastRow& r) {
    return {{"actual", r.actual, kLevelDecimals},
            {"forecast", r.forecast, kLevelDecimals},
            {"error_pct", r.error_pct, kPercentDecimals}};
}

std::vector<Field> fields(const ComponentRow& r) {
    return {{"actual_trend", r.actual_trend, kLevelDecimals},     {"actual_seasonal", r.actual_seasonal, kLevelDecimals},
            {"actual_sum", r.actual_sum, kLevelDecimals},         {"forecast_trend", r.forecast_trend, kLevelDecimals},
            {"past_seasonal", r.past_seasonal, kLevelDecimals},   {"forecast_sum", r.forecast_sum, kLevelDecimals},
            {"error_pct", r.error_pct, kPercentDecimals}};
}

std::vector<Field> fields(const OverlapRow& r) {
    return {{"trend1", r.trend1, kLevelDecimals}, {"seasonal1", r.seasonal1, kLevelDecimals},
            {"sum1", r.sum1, kLevelDecimals},     {"trend2", r.trend2, kLevelDecimals},
            {"seasonal2", r.seasonal2, kLevelDecimals}, {"sum2", r.sum2, kLevelDecimals},
            {"variation_pct", r.variation_pct, kPercentDecimals}};
}

template <typename Row>
std::string render(std::span<const Row> rows, ReportFormat format, const Row& prototype) {
    if (format == ReportFormat::json) {
        auto doc = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            obj["stamp"] = row.stamp.to_string();
            for (const auto& f : fields(row)) {
                obj[std::string(f.name)] = detail::rounded(f.value, f.decimals);
            }
            doc.push_back(std::move(obj));
        }
        return doc.dump(2) + "\n";
    }

    std::string out = "stamp";
    for (const auto& f : fields(prototype)) {
        out += ',';
        out += f.name;
    }
    out += '\n';
    for (const auto& row : rows) {
        out += row.stamp.to_string();
        for (const auto& f : fields(row)) {
            out += ',';
            out += detail::fixed(f.value, f.decimals);
        }
        out += '\n';
    }
    return out;
}

const MonthStamp kEpoch{1970, 1};

} // namespace

std::string write_report(std::span<const ForecastRow> rows, ReportFormat format) {
    return render(rows, format, ForecastRow{kEpoch, 0, 0, 0});
}

std::string write_report(std::span<const ComponentRow> rows, ReportFormat format) {
    return render(rows, format, ComponentRow{kEpoch, 0, 0, 0, 0, 0, 0, 0});
}

std::string write_report(std::span<const OverlapRow> rows, ReportFormat format) {
    return render(rows, format, OverlapRow{kEpoch, 0, 0, 0, 0, 0, 0, 0});
}

} // namespace tsdecomp
