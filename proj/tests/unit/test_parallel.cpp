#include "doctest.h"
#include "tsdecomp/decomposition.hpp"
#include "tsdecomp/fixture.hpp"
#include "tsdecomp/holt_winters.hpp"
#include "tsdecomp/optimizer.hpp"
#include "tsdecomp/reference.hpp"

#include <cmath>
#include <random>

#include <omp.h>

using namespace tsdecomp;

TEST_CASE("parallel centered_ma matches the serial reference bit for bit") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0, 1000);
    for (std::size_t len : {13, 72, 5000, 20000}) {
        std::vector<double> y(len);
        for (auto& v : y) {
            v = n(rng);
        }
        MonthlySeries s({1900, 1}, y);
        for (int period : {2, 12}) {
            CHECK(centered_ma(s, period) == reference::centered_ma(s, period));
        }
    }
}

TEST_CASE("parallel grid_search matches the serial reference") {
    const auto s = embedded_fixture("auto-sector").window({2010, 1}, {2014, 12});
    const auto init = hw_init(s, 12, true, true);
    auto sse = [&](std::span<const double> x) { return hw_filter(s, {x[0], x[1], x[2]}, init, 12).sse; };
    for (std::size_t steps : {2, 6, 11}) {
        auto par = grid_search(sse, Box::unit(3), steps);
        auto ser = reference::grid_search(sse, Box::unit(3), steps);
        CHECK(par.point == ser.point);
        CHECK(par.value == ser.value);
        CHECK(par.evaluations == ser.evaluations);
    }

    // plateau objective: ties everywhere, the lexicographically first point must win
    auto flat = [](std::span<const double> x) { return std::floor(x[0] * 2) + std::floor(x[1] * 2); };
    auto p = grid_search(flat, Box::unit(4), 5);
    CHECK(p.point == reference::grid_search(flat, Box::unit(4), 5).point);
    CHECK(p.point == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("parallel method_two matches the serial reference for any thread count") {
    auto fx = embedded_fixture("auto-sector");
    auto ser = reference::method_two(fx, {2015, 1}, {2015, 6});
    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        auto par = method_two(fx, {2015, 1}, {2015, 6});
        REQUIRE(par.size() == ser.size());
        for (std::size_t k = 0; k < par.size(); ++k) {
            CHECK(par[k].stamp == ser[k].stamp);
            CHECK(par[k].forecast == ser[k].forecast);
            CHECK(par[k].error_pct == ser[k].error_pct);
        }
    }
    omp_set_num_threads(saved);
}
