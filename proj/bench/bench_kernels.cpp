// Parallel kernels against their serial references.

#include "tsdecomp/decomposition.hpp"
#include "tsdecomp/evaluation.hpp"
#include "tsdecomp/fixture.hpp"
#include "tsdecomp/holt_winters.hpp"
#include "tsdecomp/optimizer.hpp"
#include "tsdecomp/reference.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace tsdecomp;

namespace {

MonthlySeries long_series(std::size_t n) {
    std::vector<double> y(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double x = static_cast<double>(t);
        y[t] = 10000 + 3 * x + 400 * std::sin(x * 0.5235987755982988) + 50 * std::sin(x * 0.37);
    }
    return MonthlySeries({1900, 1}, std::move(y));
}

template <bool Parallel>
void bm_centered_ma(benchmark::State& state) {
    const auto s = long_series(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto t = Parallel ? centered_ma(s, 12) : reference::centered_ma(s, 12);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

Objective hw_objective() {
    const auto training = embedded_fixture("auto-sector").window({2010, 1}, {2014, 12});
    const auto init = hw_init(training, 12, true, true);
    return [training, init](std::span<const double> x) {
        return hw_filter(training, {x[0], x[1], x[2]}, init, 12).sse;
    };
}

template <bool Parallel>
void bm_grid_search(benchmark::State& state) {
    const auto f = hw_objective();
    const auto box = Box::unit(3);
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? grid_search(f, box, steps) : reference::grid_search(f, box, steps);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void bm_method_two(benchmark::State& state) {
    const auto s = embedded_fixture("auto-sector");
    for (auto _ : state) {
        auto rows = Parallel ? method_two(s, {2015, 1}, {2015, 12}) : reference::method_two(s, {2015, 1}, {2015, 12});
        benchmark::DoNotOptimize(rows);
    }
}

} // namespace

BENCHMARK(bm_centered_ma<false>)->Name("centered_ma/serial")->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK(bm_centered_ma<true>)->Name("centered_ma/parallel")->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK(bm_grid_search<false>)->Name("grid_search/serial")->Arg(6)->Arg(11);
BENCHMARK(bm_grid_search<true>)->Name("grid_search/parallel")->Arg(6)->Arg(11);
BENCHMARK(bm_method_two<false>)->Name("method_two/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_method_two<true>)->Name("method_two/parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
