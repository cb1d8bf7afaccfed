#pragma once

// Published decomposition and evaluation tables for the auto-sector fixture,
// transcribed as printed (rounded values, including the rows that disagree
// with their own column formulas).

#include <array>

namespace golden {

// Trend, 2010-07 .. 2015-06 (60 months)
inline constexpr std::array<double, 60> kTrend = {
    8552.250,  8703.708,  8820.833,  8947.292,  9084.500,  9170.833,
    9219.958,  9231.083,  9192.208,  9125.917,  9028.667,  8899.625,
    8791.667,  8811.917,  8916.458,  9000.667,  9057.125,  9100.250,
    9135.292,  9190.167,  9281.375,  9390.458,  9527.208,  9720.083,
    9952.708,  10108.083, 10168.333, 10181.708, 10236.875, 10366.042,
    10492.458, 10589.042, 10668.750, 10774.125, 10897.458, 11005.417,
    11076.750, 11150.917, 11295.083, 11526.625, 11787.458, 12094.708,
    12486.500, 12952.292, 13496.792, 14031.333, 14553.542, 15099.958,
    15659.500, 16263.833, 16855.250, 17364.333, 17794.542, 18126.208,
    18391.083, 18625.167, 18710.583, 18693.417, 18687.625, 18662.125,
};

// Seasonal figures, January .. December
inline constexpr std::array<double, 12> kSeasonal = {
    63.611111,   -5.280556,   -22.672222, 55.419444,  -65.030556, -325.772222,
    -293.705556, -419.822222, 34.677778,  247.344444, 428.969444, 302.261111,
};

// Random, 2010-07 .. 2015-06
inline constexpr std::array<double, 60> kRandom = {
    56.455556,   426.113889,  413.488889,  649.363889,  613.530556,  626.905556,
    142.430556,  -678.802778, -363.536111, 333.663889,  97.363889,   52.147222,
    404.038889,  -2.094444,   -295.136111, -382.011111, -715.094444, -1043.511111,
    -622.902778, 698.113889,  720.297222,  917.122222,  105.822222,  -240.311111,
    -444.002778, -294.261111, -362.011111, -130.052778, -45.844444,  470.697222,
    822.930556,  225.238889,  -147.077778, -665.544444, 258.572222,  51.355556,
    -111.044444, -476.094444, -436.761111, 2.030556,    -113.427778, -149.969444,
    -567.111111, -962.011111, -691.119444, -649.752778, -410.511111, 343.813889,
    322.205556,  573.988889,  908.072222,  88.322222,   488.488889,  323.530556,
    452.305556,  945.113889,  709.088889,  292.163889,  176.405556,  20.647222,
};

// Fixed-origin forecasts for 2015 (training through 2014-12)
inline constexpr std::array<double, 12> kMethodOneForecast = {
    18507.47, 17988.12, 18383.55, 19365.45, 19545.82, 19544.08,
    19872.57, 20349.92, 21221.72, 21926.94, 22486.62, 22685.94,
};
inline constexpr std::array<double, 12> kMethodOneErrorPct = {
    -2.11, -8.05, -5.22, 1.70, 3.97, 6.47, 5.67, 7.57, 22.33, 23.62, 21.32, 23.85,
};

// Rolling one-step forecasts for 2015
inline constexpr std::array<double, 12> kMethodTwoForecast = {
    18507, 18426, 19825, 20307, 19687, 18937, 18609, 19077, 19794, 18038, 18104, 18470,
};
inline constexpr std::array<double, 12> kMethodTwoErrorPct = {
    -2.12, -5.82, 2.21, 6.65, 4.72, 3.16, -1.05, 0.84, 14.10, 1.70, -2.33, 0.84,
};

// Trend-component comparison, Jan..Jun 2015: columns B, C, D, F
struct ComponentGolden {
    double actual_trend;
    double actual_seasonal;
    double actual_sum;
    double past_seasonal;
};
inline constexpr std::array<ComponentGolden, 6> kMethodThree = {{
    {18391, 64, 18455, 61},
    {18625, -5, 18620, -131},
    {18710, -23, 18687, -90},
    {18693, 55, 18748, 93},
    {18688, -65, 18623, 1},
    {18662, -326, 18336, 221},
}};

// Window comparison 2011-07 .. 2014-06: columns A..F and % variation
struct OverlapGolden {
    double trend1, seasonal1, sum1, trend2, seasonal2, sum2, variation_pct;
};
inline constexpr std::array<OverlapGolden, 36> kMethodFour = {{
    {8792, -264, 8498, 8792, -258, 8534, 0.36},
    {8812, -452, 8360, 8812, -477, 8335, -0.30},
    {8916, -82, 8834, 8916, -19, 8897, 0.71},
    {9000, 336, 9336, 9000, 134, 9134, -2.16},
    {9057, 417, 9474, 9057, 325, 9382, -0.97},
    {9100, 332, 9432, 9100, 195, 9295, -1.45},
    {9135, 61, 9196, 9135, 77, 9212, 0.17},
    {9190, -131, 9059, 9190, 214, 9404, 3.80},
    {9281, -90, 9191, 9281, 118, 9399, 2.26},
    {9390, 93, 9483, 9390, 21, 9411, -0.76},
    {9527, 1, 9528, 9527, -40, 9487, -0.43},
    {9720, -221, 9499, 9720, -289, 9431, -0.72},
    {9952, -264, 9688, 9952, -258, 9694, -0.06},
    {10108, -452, 9656, 10108, -477, 9631, -0.26},
    {10168, -82, 10086, 10168, -19, 10149, 0.62},
    {10181, 336, 10517, 10181, 134, 10315, -1.92},
    {10236, 417, 10653, 10236, 325, 10561, -0.86},
    {10366, 332, 10698, 10366, 195, 10561, -1.28},
    {10492, 61, 10553, 10492, 77, 10569, 0.15},
    {10582, -131, 10451, 10589, 214, 10803, 3.37},
    {10669, -90, 10579, 10669, 118, 10787, 1.97},
    {10774, 93, 10867, 10774, 21, 10795, -0.66},
    {10897, 1, 10898, 10897, -40, 10857, -0.37},
    {11005, -221, 10784, 11005, -289, 10716, -0.63},
    {11077, -264, 10813, 11077, -258, 10819, 0.06},
    {11151, -452, 10699, 11151, -477, 10674, -0.23},
    {11295, -82, 11213, 11295, -19, 11276, 0.56},
    {11527, 336, 11863, 11526, 134, 11660, -1.71},
    {11787, 417, 12204, 11787, 325, 12112, -0.75},
    {12095, 332, 12427, 12095, 195, 12290, -1.10},
    {12487, 61, 12548, 12487, 77, 12564, 0.13},
    {12952, -131, 12821, 12952, 214, 13166, 2.69},
    {13497, -90, 13407, 13497, 118, 13615, 1.55},
    {14031, 93, 14124, 14031, 21, 14052, -0.51},
    {14553, 1, 14554, 14553, -40, 14513, -0.28},
    {15100, -221, 14879, 15100, -289, 14811, -0.46},
}};

/// A printed window-comparison row agrees with its own column formulas:
/// C = A + B, F = D + E, and the printed variation equals (F - C)/C*100 once
/// cut to two decimals (the table truncates as often as it rounds).
inline bool row_self_consistent(const OverlapGolden& r) {
    const double var = (r.sum2 - r.sum1) / r.sum1 * 100.0;
    const double diff = var - r.variation_pct;
    return r.trend1 + r.seasonal1 == r.sum1 && r.trend2 + r.seasonal2 == r.sum2 && diff < 0.01 && diff > -0.01;
}

} // namespace golden
