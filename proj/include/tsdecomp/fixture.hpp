#pragma once

#include "tsdecomp/series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tsdecomp {

struct Fixture {
    std::string name;
    MonthlySeries series;
    std::string citation;
};

/// Names accepted by embedded_fixture.
std::vector<std::string> fixture_names();

/// Built-in monthly series by name. Throws LookupError listing the known
/// names when `name` is not one of them.
const Fixture& embedded_fixture_info(std::string_view name);

MonthlySeries embedded_fixture(std::string_view name);

} // namespace tsdecomp
