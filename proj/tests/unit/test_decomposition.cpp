#include "doctest.h"
#include "support/golden.hpp"
#include "support/oracles.hpp"
#include "tsdecomp/decomposition.hpp"
#include "tsdecomp/errors.hpp"
#include "tsdecomp/fixture.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace tsdecomp;

namespace {
MonthlySeries fixture() {
    return embedded_fixture("auto-sector");
}
} // namespace

TEST_CASE("centered_ma reproduces the published trend") {
    auto trend = centered_ma(fixture(), 12);
    CHECK(*trend.value_at({2010, 7}) == doctest::Approx(102627.0 / 12).epsilon(1e-15));
    CHECK(std::abs(*trend.value_at({2010, 7}) - 8552.250) < 1e-9);
    CHECK(std::abs(*trend.value_at({2010, 8}) - 8703.708) < 1e-3);
}

TEST_CASE("centered_ma agrees with the explicit 13-weight oracle") {
    auto fx = fixture();
    auto expected = oracle::centered_ma12({fx.values().begin(), fx.values().end()});
    auto trend = centered_ma(fx, 12);
    for (std::size_t t = 0; t < fx.size(); ++t) {
        REQUIRE(trend[t].has_value() == expected[t].has_value());
        if (expected[t]) {
            CHECK(std::abs(*trend[t] - *expected[t]) < 1e-9);
        }
    }
}

TEST_CASE("centered_ma edge handling") {
    MonthlySeries constant({2001, 3}, std::vector<double>(30, 123.25));
    auto trend = centered_ma(constant, 12);
    CHECK(trend.defined_count() == 18);
    for (std::size_t t = 0; t < 30; ++t) {
        CHECK(trend[t].has_value() == (t >= 6 && t <= 23));
        if (trend[t]) {
            CHECK(*trend[t] == doctest::Approx(123.25).epsilon(1e-15));
        }
    }
    CHECK_THROWS_AS(centered_ma(MonthlySeries({2001, 1}, std::vector<double>(12, 1.0)), 12), DataError);
    CHECK(centered_ma(MonthlySeries({2001, 1}, std::vector<double>(13, 1.0)), 12).defined_count() == 1);
    CHECK_THROWS_AS(centered_ma(constant, 7), ContractError);
    CHECK_THROWS_AS(centered_ma(constant, 0), ContractError);
    CHECK(centered_ma(constant, 2).defined_count() == 28);
}

TEST_CASE("seasonal figures") {
    auto fx = fixture();
    auto figures = seasonal_figures(fx, centered_ma(fx, 12), 12);
    CHECK(std::abs(figures.figure({2011, 11}) - 428.969444) < 1e-3);
    CHECK(std::abs(figures.figure({2013, 6}) - (-325.772222)) < 1e-3);
    for (int m = 1; m <= 12; ++m) {
        CHECK(std::abs(figures.figure({2010, m}) - golden::kSeasonal[m - 1]) < 1e-6);
    }
    double sum = std::accumulate(figures.by_phase().begin(), figures.by_phase().end(), 0.0);
    CHECK(std::abs(sum) < 1e-6);
}

TEST_CASE("a linear ramp has zero seasonal figures") {
    std::vector<double> ramp;
    for (int t = 0; t < 48; ++t) {
        ramp.push_back(250.0 + 17.5 * t);
    }
    MonthlySeries s({2005, 4}, ramp);
    auto figures = seasonal_figures(s, centered_ma(s, 12), 12);
    for (double f : figures.by_phase()) {
        CHECK(std::abs(f) < 1e-9);
    }
}

TEST_CASE("seasonal_figures needs every month represented") {
    // 13 months: only one phase has a defined trend
    MonthlySeries s({2005, 1}, std::vector<double>(13, 1.0));
    CHECK_THROWS_AS(seasonal_figures(s, centered_ma(s, 12), 12), DataError);
}

TEST_CASE("decompose_additive on the fixture") {
    auto d = decompose_additive(fixture(), 12);
    CHECK(std::abs(*d.random.value_at({2010, 7}) - 56.455556) < 0.01);
    CHECK(std::abs(*d.random.value_at({2011, 12}) - (-1043.511111)) < 0.01);
    for (std::size_t t = 0; t < d.source.size(); ++t) {
        const bool interior = t >= 6 && t + 6 < d.source.size();
        CHECK(d.trend[t].has_value() == interior);
        CHECK(d.random[t].has_value() == interior);
        CHECK(d.seasonal[t] == d.figures.figure(d.source.stamp_at(t)));
    }
}

TEST_CASE("decompose_additive errors and degenerate input") {
    CHECK_THROWS_AS(decompose_additive(MonthlySeries({2000, 1}, std::vector<double>(23, 5.0)), 12), DataError);
    auto d = decompose_additive(MonthlySeries({2000, 1}, std::vector<double>(24, 5.0)), 12);
    for (std::size_t t = 6; t < 18; ++t) {
        CHECK(*d.trend[t] == doctest::Approx(5.0));
        CHECK(std::abs(*d.random[t]) < 1e-12);
    }
    for (double f : d.figures.by_phase()) {
        CHECK(std::abs(f) < 1e-12);
    }
}

TEST_CASE("recompose") {
    auto fx = fixture();
    auto d = decompose_additive(fx, 12);
    auto r = recompose(d);
    CHECK(std::abs(*r.value_at({2012, 6}) - 9154) < 1e-9);
    std::size_t defined = 0;
    for (std::size_t t = 0; t < fx.size(); ++t) {
        if (r[t]) {
            ++defined;
            CHECK(std::abs(*r[t] - fx[t]) < 1e-9);
        }
    }
    CHECK(defined == 60);

    auto c = recompose(decompose_additive(MonthlySeries({2000, 1}, std::vector<double>(36, -3.5)), 12));
    for (const auto& v : c.values()) {
        if (v) {
            CHECK(*v == doctest::Approx(-3.5));
        }
    }
}

TEST_CASE("property: translation equivariance and centering on noisy series") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> len(24, 120);
    std::normal_distribution<double> noise(0.0, 300.0);
    std::uniform_real_distribution<double> shift(-5000, 5000);
    std::uniform_int_distribution<int> month(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> y(static_cast<std::size_t>(len(rng)));
        double level = 10000;
        for (auto& v : y) {
            level += noise(rng) * 0.3;
            v = level + noise(rng);
        }
        const double c = shift(rng);
        std::vector<double> y2 = y;
        for (auto& v : y2) {
            v += c;
        }
        MonthStamp start(2000, month(rng));
        auto a = decompose_additive(MonthlySeries(start, y), 12);
        auto b = decompose_additive(MonthlySeries(start, y2), 12);
        double sum = 0;
        for (std::size_t k = 0; k < 12; ++k) {
            CHECK(std::abs(a.figures.by_phase()[k] - b.figures.by_phase()[k]) < 1e-9);
            sum += a.figures.by_phase()[k];
        }
        CHECK(std::abs(sum) < 1e-6);
        for (std::size_t t = 0; t < y.size(); ++t) {
            if (a.trend[t]) {
                CHECK(std::abs(*b.trend[t] - *a.trend[t] - c) < 1e-9);
                CHECK(std::abs(*b.random[t] - *a.random[t]) < 1e-9);
            }
        }
    }
}

TEST_CASE("property: overlapping windows share interior trend values") {
    auto fx = fixture();
    auto w1 = decompose_additive(fx.window({2010, 1}, {2014, 12}), 12);
    auto w2 = decompose_additive(fx.window({2011, 1}, {2015, 12}), 12);
    int shared = 0;
    for (MonthStamp m{2011, 7}; m <= MonthStamp{2014, 6}; m = month_add(m, 1)) {
        CHECK(*w1.trend.value_at(m) == *w2.trend.value_at(m));
        ++shared;
    }
    CHECK(shared == 36);
}
