#pragma once

#include <string>

#include <fmt/format.h>

namespace tsdecomp::detail {

/// Fixed-point text with a given number of decimals; -0 prints as 0.
inline std::string fixed(double v, int decimals) {
    if (v == 0.0) {
        v = 0.0;
    }
    return fmt::format("{:.{}f}", v, decimals);
}

/// Value rounded to `decimals` places, for JSON output.
double rounded(double v, int decimals);

} // namespace tsdecomp::detail
