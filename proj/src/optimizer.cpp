#include "tsdecomp/optimizer.hpp"

#include "tsdecomp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

namespace tsdecomp {

Box::Box(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size()) {
        throw ContractError("box bounds differ in dimension");
    }
    if (lower_.empty()) {
        throw ContractError("box must have at least one dimension");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] <= upper_[i])) {
            throw ContractError(fmt::format("box axis {}: lower {} exceeds upper {}", i, lower_[i], upper_[i]));
        }
    }
}

Box Box::unit(std::size_t dimension) {
    return {std::vector<double>(dimension, 0.0), std::vector<double>(dimension, 1.0)};
}

bool Box::contains(std::span<const double> point) const {
    if (point.size() != dimension()) {
        return false;
    }
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (!(point[i] >= lower_[i] && point[i] <= upper_[i])) {
            return false;
        }
    }
    return true;
}

void Box::project(std::span<double> point) const {
    for (std::size_t i = 0; i < point.size(); ++i) {
        point[i] = std::clamp(point[i], lower_[i], upper_[i]);
    }
}

namespace detail {

void check_grid(const Box& box, std::size_t steps_per_axis) {
    if (steps_per_axis < 2) {
        throw ContractError("grid search needs at least 2 steps per axis");
    }
    if (box.dimension() > kMaxGridDimension) {
        throw ContractError(
            fmt::format("grid search limited to {} dimensions, got {}", kMaxGridDimension, box.dimension()));
    }
}

std::size_t lattice_size(std::size_t dimension, std::size_t steps_per_axis) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < dimension; ++i) {
        n *= steps_per_axis;
    }
    return n;
}

void lattice_point(const Box& box, std::size_t steps_per_axis, std::size_t index, std::span<double> out) {
    const auto lo = box.lower();
    const auto hi = box.upper();
    const double last = static_cast<double>(steps_per_axis - 1);
    for (std::size_t axis = box.dimension(); axis-- > 0;) {
        auto k = index % steps_per_axis;
        index /= steps_per_axis;
        // hit both faces exactly
        out[axis] = k + 1 == steps_per_axis ? hi[axis]
                                            : lo[axis] + (hi[axis] - lo[axis]) * (static_cast<double>(k) / last);
    }
}

bool better(double value_a, std::span<const double> point_a, double value_b, std::span<const double> point_b) {
    // NaN never wins
    if (std::isnan(value_a)) {
        return false;
    }
    if (std::isnan(value_b)) {
        return true;
    }
    if (value_a != value_b) {
        return value_a < value_b;
    }
    return std::lexicographical_compare(point_a.begin(), point_a.end(), point_b.begin(), point_b.end());
}

} // namespace detail

OptResult grid_search(const Objective& objective, const Box& box, std::size_t steps_per_axis) {
    detail::check_grid(box, steps_per_axis);
    const std::size_t dim = box.dimension();
    const auto count = static_cast<long>(detail::lattice_size(dim, steps_per_axis));
    std::vector<double> values(static_cast<std::size_t>(count));

#pragma omp parallel
    {
        std::vector<double> point(dim);
#pragma omp for schedule(static)
        for (long i = 0; i < count; ++i) {
            detail::lattice_point(box, steps_per_axis, static_cast<std::size_t>(i), point);
            values[static_cast<std::size_t>(i)] = objective(point);
        }
    }

    // Sequential reduction in lattice order keeps the tie-break deterministic.
    OptResult best{std::vector<double>(dim), std::numeric_limits<double>::quiet_NaN(),
                   static_cast<std::size_t>(count), true};
    std::vector<double> point(dim);
    for (long i = 0; i < count; ++i) {
        detail::lattice_point(box, steps_per_axis, static_cast<std::size_t>(i), point);
        if (i == 0 || detail::better(values[static_cast<std::size_t>(i)], point, best.value, best.point)) {
            best.value = values[static_cast<std::size_t>(i)];
            best.point = point;
        }
    }
    return best;
}

OptResult nelder_mead(const Objective& objective, std::span<const double> start, const Box& box,
                      const NelderMeadOptions& options) {
    const std::size_t dim = box.dimension();
    if (start.size() != dim) {
        throw ContractError("start point dimension does not match box");
    }
    if (!box.contains(start)) {
        throw ContractError("start point outside box");
    }
    if (!(options.tolerance > 0.0)) {
        throw ContractError("tolerance must be positive");
    }
    if (options.max_evals < dim + 1) {
        throw ContractError("max_evals must allow evaluating the initial simplex");
    }

    using Point = std::vector<double>;
    std::size_t evals = 0;
    auto eval = [&](Point& x) {
        box.project(x);
        ++evals;
        double v = objective(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    std::vector<Point> simplex(dim + 1, Point(start.begin(), start.end()));
    for (std::size_t i = 0; i < dim; ++i) {
        const double step = 0.1 * (box.upper()[i] - box.lower()[i]);
        auto& v = simplex[i + 1];
        v[i] = v[i] + step <= box.upper()[i] ? v[i] + step : v[i] - step;
    }
    std::vector<double> fvals(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
        fvals[i] = eval(simplex[i]);
    }
    const double start_value = fvals[0];

    std::vector<std::size_t> order(dim + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fvals[a] < fvals[b]; });
        std::vector<Point> s2;
        std::vector<double> f2;
        for (auto i : order) {
            s2.push_back(std::move(simplex[i]));
            f2.push_back(fvals[i]);
        }
        simplex = std::move(s2);
        fvals = std::move(f2);
    };

    auto combine = [&](const Point& centroid, const Point& from, double coef) {
        // centroid + coef * (centroid - from)
        Point p(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            p[k] = centroid[k] + coef * (centroid[k] - from[k]);
        }
        return p;
    };

    bool converged = false;
    sort_simplex();
    while (true) {
        if (fvals[dim] - fvals[0] < options.tolerance) {
            converged = true;
            break;
        }
        if (evals >= options.max_evals) {
            break;
        }
        Point centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                centroid[k] += simplex[i][k];
            }
        }
        for (auto& c : centroid) {
            c /= static_cast<double>(dim);
        }

        Point reflected = combine(centroid, simplex[dim], 1.0);
        const double fr = eval(reflected);
        if (fr < fvals[0]) {
            Point expanded = combine(centroid, simplex[dim], 2.0);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex[dim] = std::move(expanded);
                fvals[dim] = fe;
            } else {
                simplex[dim] = std::move(reflected);
                fvals[dim] = fr;
            }
        } else if (fr < fvals[dim - 1]) {
            simplex[dim] = std::move(reflected);
            fvals[dim] = fr;
        } else {
            const bool outside = fr < fvals[dim];
            Point contracted = outside ? combine(centroid, simplex[dim], 0.5) : combine(centroid, simplex[dim], -0.5);
            const double fc = eval(contracted);
            if (fc < (outside ? fr : fvals[dim])) {
                simplex[dim] = std::move(contracted);
                fvals[dim] = fc;
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    for (std::size_t k = 0; k < dim; ++k) {
                        simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
                    }
                    fvals[i] = eval(simplex[i]);
                }
            }
        }
        sort_simplex();
    }

    OptResult result{simplex[0], fvals[0], evals, converged};
    if (!(result.value <= start_value)) {
        // never report anything worse than where we started
        result.point.assign(start.begin(), start.end());
        result.value = start_value;
    }
    return result;
}

} // namespace tsdecomp
