#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tsdecomp {

/// Objective for the minimizers. Must be free of side effects: the grid
/// search evaluates it from several threads at once.
using Objective = std::function<double(std::span<const double>)>;

/// Axis-aligned box lower <= x <= upper.
class Box {
public:
    /// Throws ContractError on dimension mismatch, empty box, or lower > upper.
    Box(std::vector<double> lower, std::vector<double> upper);

    /// [0,1]^dimension
    static Box unit(std::size_t dimension);

    std::size_t dimension() const noexcept { return lower_.size(); }
    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }

    bool contains(std::span<const double> point) const;

    /// Clamp each coordinate into the box.
    void project(std::span<double> point) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

struct OptResult {
    std::vector<double> point;
    double value = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

struct NelderMeadOptions {
    double tolerance = 1e-8;      // stop when max - min of the simplex values falls below this
    std::size_t max_evals = 2000;
};

/// Largest dimension grid_search accepts.
inline constexpr std::size_t kMaxGridDimension = 4;

/// Exhaustive search over the uniform lattice with `steps_per_axis` points per
/// axis, both faces included. Ties go to the lexicographically smallest point.
/// Lattice points are evaluated in parallel; the result is identical to
/// reference::grid_search.
OptResult grid_search(const Objective& objective, const Box& box, std::size_t steps_per_axis);

/// Nelder-Mead simplex (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
/// Every trial point is projected onto the box before it is evaluated.
OptResult nelder_mead(const Objective& objective, std::span<const double> start, const Box& box,
                      const NelderMeadOptions& options = {});

namespace detail {

/// Coordinates of lattice point `index` (row-major, last axis fastest).
void lattice_point(const Box& box, std::size_t steps_per_axis, std::size_t index, std::span<double> out);

void check_grid(const Box& box, std::size_t steps_per_axis);

std::size_t lattice_size(std::size_t dimension, std::size_t steps_per_axis);

/// True when (value_a, point_a) should win over (value_b, point_b).
bool better(double value_a, std::span<const double> point_a, double value_b, std::span<const double> point_b);

} // namespace detail

} // namespace tsdecomp
