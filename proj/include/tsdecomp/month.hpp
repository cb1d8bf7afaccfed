#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace tsdecomp {

/// A calendar month. Ordered chronologically.
class MonthStamp {
public:
    /// Throws ContractError unless 1 <= month <= 12.
    MonthStamp(int year, int month);

    int year() const noexcept { return year_; }
    int month() const noexcept { return month_; }

    /// Months since year 0, January. Strictly increasing with time.
    long ordinal() const noexcept { return static_cast<long>(year_) * 12 + (month_ - 1); }

    static MonthStamp from_ordinal(long ordinal);

    /// "YYYY-MM"
    std::string to_string() const;

    /// Parses exactly "YYYY-MM"; returns nullopt on any deviation.
    static std::optional<MonthStamp> parse(std::string_view text);

    friend auto operator<=>(const MonthStamp&, const MonthStamp&) = default;

private:
    int year_;
    int month_;
};

/// Advance by k calendar months (k may be negative).
MonthStamp month_add(MonthStamp stamp, long k);

/// Signed number of months from `from` to `to`.
long months_between(MonthStamp from, MonthStamp to);

} // namespace tsdecomp
