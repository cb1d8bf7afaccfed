#include "tsdecomp/errors.hpp"
#include "tsdecomp/io.hpp"
#include "text_format.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace tsdecomp {

using detail::fixed;

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view content) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!content.empty()) {
        auto nl = content.find('\n');
        auto text = content.substr(0, nl);
        if (!text.empty() && text.back() == '\r') {
            text.remove_suffix(1);
        }
        lines.push_back({number++, text});
        if (nl == std::string_view::npos) {
            break;
        }
        content.remove_prefix(nl + 1);
    }
    return lines;
}

std::pair<std::string_view, std::string_view> two_fields(const Line& line) {
    auto comma = line.text.find(',');
    if (comma == std::string_view::npos || line.text.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError(line.number, fmt::format("expected 2 comma-separated fields, got '{}'", line.text));
    }
    return {line.text.substr(0, comma), line.text.substr(comma + 1)};
}

double parse_value(const Line& line, std::string_view field) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && field.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw ParseError(line.number, fmt::format("'{}' is not a finite decimal number", field));
    }
    return v;
}

std::chrono::year_month_day parse_date(const Line& line, std::string_view field) {
    auto bad = [&] { return ParseError(line.number, fmt::format("'{}' is not an ISO date (YYYY-MM-DD)", field)); };
    if (field.size() != 10 || field[4] != '-' || field[7] != '-') {
        throw bad();
    }
    int y = 0;
    unsigned m = 0;
    unsigned d = 0;
    auto num = [&](std::size_t pos, std::size_t len, auto& out) {
        for (std::size_t i = pos; i < pos + len; ++i) {
            if (field[i] < '0' || field[i] > '9') {
                throw bad();
            }
        }
        std::from_chars(field.data() + pos, field.data() + pos + len, out);
    };
    num(0, 4, y);
    num(5, 2, m);
    num(8, 2, d);
    std::chrono::year_month_day date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!date.ok()) {
        throw bad();
    }
    return date;
}

/// Header check plus removal of the trailing empty line left by a final LF.
std::vector<Line> body_lines(std::string_view content, std::string_view header) {
    auto lines = split_lines(content);
    if (lines.empty()) {
        throw ParseError(1, fmt::format("missing header '{}'", header));
    }
    if (lines.front().text != header) {
        throw ParseError(1, fmt::format("expected header '{}', got '{}'", header, lines.front().text));
    }
    while (lines.size() > 1 && lines.back().text.empty()) {
        lines.pop_back();
    }
    if (lines.size() == 1) {
        throw ParseError(2, "no data rows after header");
    }
    lines.erase(lines.begin());
    for (const auto& l : lines) {
        if (l.text.empty()) {
            throw ParseError(l.number, "empty line");
        }
    }
    return lines;
}

std::string cell(const std::optional<double>& v) {
    return v ? fixed(*v, 6) : std::string{};
}

} // namespace

std::vector<DailyRecord> read_daily_csv(std::string_view content) {
    std::vector<DailyRecord> records;
    for (const auto& line : body_lines(content, "date,value")) {
        auto [date, value] = two_fields(line);
        records.push_back({parse_date(line, date), parse_value(line, value)});
    }
    return records;
}

MonthlySeries read_monthly_csv(std::string_view content) {
    std::optional<MonthStamp> start;
    std::optional<MonthStamp> previous;
    std::vector<double> values;
    for (const auto& line : body_lines(content, "month,value")) {
        auto [month_text, value_text] = two_fields(line);
        auto month = MonthStamp::parse(month_text);
        if (!month) {
            throw ParseError(line.number, fmt::format("'{}' is not a month (YYYY-MM)", month_text));
        }
        if (previous && *month != month_add(*previous, 1)) {
            if (*month <= *previous) {
                throw ParseError(line.number, fmt::format("month {} is out of order after {}", month->to_string(),
                                                          previous->to_string()));
            }
            throw ParseError(line.number,
                             fmt::format("gap between {} and {}: missing {}", previous->to_string(),
                                         month->to_string(), month_add(*previous, 1).to_string()));
        }
        if (!start) {
            start = month;
        }
        previous = month;
        values.push_back(parse_value(line, value_text));
    }
    return {*start, std::move(values)};
}

std::string write_monthly_csv(const MonthlySeries& series) {
    std::string out = "month,value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += fmt::format("{},{}\n", series.stamp_at(i).to_string(), fixed(series[i], 6));
    }
    return out;
}

std::string write_decomposition_csv(const Decomposition& d) {
    std::string out = "month,aggregate,trend,seasonal,random\n";
    for (std::size_t i = 0; i < d.source.size(); ++i) {
        out += fmt::format("{},{},{},{},{}\n", d.source.stamp_at(i).to_string(), fixed(d.source[i], 6),
                           cell(d.trend[i]), fixed(d.seasonal[i], 6), cell(d.random[i]));
    }
    return out;
}

std::string write_forecast_csv(const Forecast& forecast) {
    std::string out = "month,forecast\n";
    for (std::size_t i = 0; i < forecast.values.size(); ++i) {
        out += fmt::format("{},{}\n", forecast.stamp_at(i).to_string(), fixed(forecast.values[i], 6));
    }
    return out;
}

} // namespace tsdecomp
