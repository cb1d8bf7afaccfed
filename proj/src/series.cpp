#include "tsdecomp/series.hpp"

#include "tsdecomp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

namespace tsdecomp {

namespace {

std::size_t checked_index(MonthStamp start, std::size_t size, MonthStamp stamp) {
    long offset = months_between(start, stamp);
    if (offset < 0 || offset >= static_cast<long>(size)) {
        throw RangeError(fmt::format("month {} outside series span {}..{}", stamp.to_string(),
                                     start.to_string(),
                                     month_add(start, static_cast<long>(size) - 1).to_string()));
    }
    return static_cast<std::size_t>(offset);
}

} // namespace

MonthlySeries::MonthlySeries(MonthStamp start, std::vector<double> values)
    : start_(start), values_(std::move(values)) {
    if (values_.empty()) {
        throw DataError("monthly series must not be empty");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DataError(fmt::format("non-finite value at {}", stamp_at(i).to_string()));
        }
    }
}

std::size_t MonthlySeries::index_of(MonthStamp stamp) const {
    return checked_index(start_, values_.size(), stamp);
}

MonthlySeries MonthlySeries::window(MonthStamp first, MonthStamp last) const {
    if (last < first) {
        throw RangeError(
            fmt::format("window start {} after end {}", first.to_string(), last.to_string()));
    }
    auto lo = index_of(first);
    auto hi = index_of(last);
    return {first, std::vector<double>(values_.begin() + static_cast<long>(lo),
                                       values_.begin() + static_cast<long>(hi) + 1)};
}

PartialSeries::PartialSeries(MonthStamp start, std::vector<std::optional<double>> values)
    : start_(start), values_(std::move(values)) {}

std::size_t PartialSeries::index_of(MonthStamp stamp) const {
    return checked_index(start_, values_.size(), stamp);
}

std::size_t PartialSeries::defined_count() const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); }));
}

MonthlySeries PartialSeries::defined_span() const {
    auto first = std::find_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
    if (first == values_.end()) {
        throw DataError("partial series has no defined values");
    }
    auto last = std::find_if(values_.rbegin(), values_.rend(), [](const auto& v) { return v.has_value(); });
    std::vector<double> out;
    for (auto it = first; it != last.base(); ++it) {
        if (!it->has_value()) {
            throw DataError("partial series has an interior gap");
        }
        out.push_back(**it);
    }
    return {stamp_at(static_cast<std::size_t>(first - values_.begin())), std::move(out)};
}

MonthlySeries aggregate_daily(std::span<const DailyRecord> records) {
    if (records.empty()) {
        throw DataError("no daily records to aggregate");
    }
    // Values are sorted per month before summing so the mean does not depend
    // on input order.
    std::map<long, std::vector<double>> by_month;
    for (const auto& r : records) {
        if (!r.date.ok()) {
            throw DataError("invalid calendar date in daily records");
        }
        if (!std::isfinite(r.value)) {
            throw DataError("non-finite daily value");
        }
        by_month[month_of(r.date).ordinal()].push_back(r.value);
    }
    const long first = by_month.begin()->first;
    const long last = by_month.rbegin()->first;
    std::vector<double> means;
    means.reserve(static_cast<std::size_t>(last - first + 1));
    for (long m = first; m <= last; ++m) {
        auto it = by_month.find(m);
        if (it == by_month.end()) {
            throw DataError(fmt::format("no daily records for month {}",
                                        MonthStamp::from_ordinal(m).to_string()));
        }
        auto& vals = it->second;
        std::sort(vals.begin(), vals.end());
        double sum = 0.0;
        for (double v : vals) {
            sum += v;
        }
        means.push_back(sum / static_cast<double>(vals.size()));
    }
    return {MonthStamp::from_ordinal(first), std::move(means)};
}

} // namespace tsdecomp
