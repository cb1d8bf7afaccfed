#pragma once

#include "tsdecomp/decomposition.hpp"
#include "tsdecomp/evaluation.hpp"
#include "tsdecomp/holt_winters.hpp"
#include "tsdecomp/series.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsdecomp {

// Text formats: UTF-8, LF line endings, '.' decimal separator, months as
// YYYY-MM and dates as YYYY-MM-DD. Undefined values are empty cells.

/// "date,value" CSV. Parse failures throw ParseError with the 1-based line.
std::vector<DailyRecord> read_daily_csv(std::string_view content);

/// "month,value" CSV with strictly consecutive months.
MonthlySeries read_monthly_csv(std::string_view content);

std::string write_monthly_csv(const MonthlySeries& series);

/// "month,aggregate,trend,seasonal,random", 6 decimals.
std::string write_decomposition_csv(const Decomposition& d);

/// "month,forecast", 6 decimals.
std::string write_forecast_csv(const Forecast& forecast);

enum class ReportFormat { csv, json };

// Level fields are written with 6 decimals, percentages with 2. JSON output
// is an array of objects keyed by the same field names as the CSV header.
std::string write_report(std::span<const ForecastRow> rows, ReportFormat format);
std::string write_report(std::span<const ComponentRow> rows, ReportFormat format);
std::string write_report(std::span<const OverlapRow> rows, ReportFormat format);

/// Four stacked panels (observed, trend, seasonal, random) as a standalone
/// SVG document. Throws ContractError if either dimension is below 100 px.
std::string render_decomposition_svg(const Decomposition& d, int width_px, int height_px);

} // namespace tsdecomp
