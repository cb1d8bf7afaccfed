#pragma once

#include "tsdecomp/month.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tsdecomp {

/// One daily observation of an index level.
struct DailyRecord {
    std::chrono::year_month_day date;
    double value;
};

/// Contiguous monthly values. Position i holds month start + i.
class MonthlySeries {
public:
    /// Throws DataError if `values` is empty or contains a non-finite value.
    MonthlySeries(MonthStamp start, std::vector<double> values);

    MonthStamp start() const noexcept { return start_; }
    MonthStamp end() const { return month_add(start_, static_cast<long>(values_.size()) - 1); }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    MonthStamp stamp_at(std::size_t i) const { return month_add(start_, static_cast<long>(i)); }
    bool contains(MonthStamp stamp) const { return start_ <= stamp && stamp <= end(); }

    /// Position of `stamp`; throws RangeError outside the span.
    std::size_t index_of(MonthStamp stamp) const;

    double value_at(MonthStamp stamp) const { return values_[index_of(stamp)]; }

    /// Copy of the inclusive sub-span [first, last]. Throws RangeError when
    /// either end is outside the series or first > last.
    MonthlySeries window(MonthStamp first, MonthStamp last) const;

    friend bool operator==(const MonthlySeries&, const MonthlySeries&) = default;

private:
    MonthStamp start_;
    std::vector<double> values_;
};

/// Monthly values where some positions are undefined (trend and random edges).
class PartialSeries {
public:
    PartialSeries(MonthStamp start, std::vector<std::optional<double>> values);

    MonthStamp start() const noexcept { return start_; }
    MonthStamp end() const { return month_add(start_, static_cast<long>(values_.size()) - 1); }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const std::optional<double>> values() const noexcept { return values_; }
    const std::optional<double>& operator[](std::size_t i) const { return values_[i]; }

    MonthStamp stamp_at(std::size_t i) const { return month_add(start_, static_cast<long>(i)); }
    std::size_t index_of(MonthStamp stamp) const;
    std::optional<double> value_at(MonthStamp stamp) const { return values_[index_of(stamp)]; }

    std::size_t defined_count() const;

    /// The contiguous defined block as a MonthlySeries. Throws DataError if
    /// nothing is defined or the defined positions have interior gaps.
    MonthlySeries defined_span() const;

    friend bool operator==(const PartialSeries&, const PartialSeries&) = default;

private:
    MonthStamp start_;
    std::vector<std::optional<double>> values_;
};

inline MonthStamp month_of(std::chrono::year_month_day date) {
    return {static_cast<int>(date.year()), static_cast<int>(static_cast<unsigned>(date.month()))};
}

/// Monthly means of daily records. The result spans exactly the months from
/// the earliest to the latest record; every month in between must have data.
MonthlySeries aggregate_daily(std::span<const DailyRecord> records);

} // namespace tsdecomp
