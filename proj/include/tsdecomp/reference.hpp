#pragma once

// Single-threaded versions of the OpenMP kernels. The parallel code paths
// must agree with these bit for bit; tests and the benchmark compare them.

#include "tsdecomp/evaluation.hpp"
#include "tsdecomp/optimizer.hpp"
#include "tsdecomp/series.hpp"

namespace tsdecomp::reference {

PartialSeries centered_ma(const MonthlySeries& series, int period);

OptResult grid_search(const Objective& objective, const Box& box, std::size_t steps_per_axis);

std::vector<ForecastRow> method_two(const MonthlySeries& series, MonthStamp eval_start, MonthStamp eval_end);

} // namespace tsdecomp::reference
