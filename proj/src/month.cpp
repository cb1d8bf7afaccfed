#include "tsdecomp/month.hpp"

#include "tsdecomp/errors.hpp"

#include <charconv>

#include <fmt/format.h>

namespace tsdecomp {

MonthStamp::MonthStamp(int year, int month) : year_(year), month_(month) {
    if (month < 1 || month > 12) {
        throw ContractError(fmt::format("month {} outside 1..12", month));
    }
}

MonthStamp MonthStamp::from_ordinal(long ordinal) {
    // floor division so negative ordinals still land in 1..12
    long year = ordinal >= 0 ? ordinal / 12 : -((-ordinal + 11) / 12);
    long month0 = ordinal - year * 12;
    return {static_cast<int>(year), static_cast<int>(month0) + 1};
}

std::string MonthStamp::to_string() const {
    return fmt::format("{:04d}-{:02d}", year_, month_);
}

std::optional<MonthStamp> MonthStamp::parse(std::string_view text) {
    if (text.size() != 7 || text[4] != '-') {
        return std::nullopt;
    }
    for (std::size_t i : {0, 1, 2, 3, 5, 6}) {
        if (text[i] < '0' || text[i] > '9') {
            return std::nullopt;
        }
    }
    int year = 0;
    int month = 0;
    auto [py, ey] = std::from_chars(text.data(), text.data() + 4, year);
    auto [pm, em] = std::from_chars(text.data() + 5, text.data() + 7, month);
    if (ey != std::errc{} || py != text.data() + 4 || em != std::errc{} || pm != text.data() + 7) {
        return std::nullopt;
    }
    if (month < 1 || month > 12) {
        return std::nullopt;
    }
    return MonthStamp(year, month);
}

MonthStamp month_add(MonthStamp stamp, long k) {
    return MonthStamp::from_ordinal(stamp.ordinal() + k);
}

long months_between(MonthStamp from, MonthStamp to) {
    return to.ordinal() - from.ordinal();
}

} // namespace tsdecomp
