#include "tsdecomp/fixture.hpp"

#include "tsdecomp/errors.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace tsdecomp {

namespace {

// Monthly averages of the daily auto-sector index, January 2010 to December 2015.
const std::vector<double> kAutoSector = {
    7380,  6958,  7584,  7702,  7581,  8034,  8315,  8710,  9269,  9844,  10127, 10100,  // 2010
    9426,  8547,  8806,  9515,  9061,  8626,  8902,  8390,  8656,  8866,  8771,  8359,   // 2011
    8576,  9883,  9979,  10363, 9568,  9154,  9215,  9394,  9841,  10299, 10620, 11139,  // 2012
    11379, 10809, 10499, 10164, 11091, 10731, 10672, 10255, 10893, 11776, 12103, 12247,  // 2013
    11983, 11985, 12783, 13437, 14078, 15118, 15688, 16418, 17798, 17700, 18712, 18752,  // 2014
    18907, 19565, 19397, 19041, 18799, 18357, 18806, 18918, 17348, 17738, 18535, 18317,  // 2015
};

const std::vector<Fixture>& registry() {
    static const std::vector<Fixture> fixtures = {
        {"auto-sector", MonthlySeries({2010, 1}, kAutoSector),
         "Indian auto sector index, monthly averages of daily closes, 2010-01..2015-12"},
    };
    return fixtures;
}

} // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& f : registry()) {
        names.push_back(f.name);
    }
    return names;
}

const Fixture& embedded_fixture_info(std::string_view name) {
    for (const auto& f : registry()) {
        if (f.name == name) {
            return f;
        }
    }
    throw LookupError(fmt::format("unknown fixture '{}' (known: {})", name, fmt::join(fixture_names(), ", ")));
}

MonthlySeries embedded_fixture(std::string_view name) {
    return embedded_fixture_info(name).series;
}

} // namespace tsdecomp
