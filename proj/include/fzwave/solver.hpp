#pragma once

// Displacement field for initial data (u0, v0):
//   u = u0 * K_eps + v0 * int_0^t K_eps
// and the peak bookkeeping used to track the propagating disturbance.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "initial_data.hpp"
#include "kernel.hpp"
#include "params.hpp"

namespace fzwave {

inline Field solve_field(const InitialData& u0, const InitialData& v0, const std::vector<double>& x_grid,
                         const std::vector<double>& t_list, const ModelParams& p, const QuadratureConfig& q = {},
                         Route route = Route::automatic) {
    return detail::field(u0, v0, x_grid, t_list, p, q, route);
}

// beta = 0: u = (u0 + t v0) * delta_eps, closed form
inline Field nonprop_solution(const InitialData& u0, const InitialData& v0, const std::vector<double>& x_grid,
                              const std::vector<double>& t_list, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ValidationError("epsilon", "(0,1]", epsilon);
    detail::check_grid(x_grid, t_list);
    validate_initial(u0, "u0");
    validate_initial(v0, "v0");
    Field out{x_grid, t_list, {}, ModelParams{0.0, 0.0, 0.5, epsilon}, {}, "nonpropagating"};
    out.values.assign(t_list.size(), std::vector<double>(x_grid.size()));
    for (std::size_t it = 0; it < t_list.size(); ++it)
        for (std::size_t i = 0; i < x_grid.size(); ++i)
            out.values[it][i] =
                smoothed_value(u0, x_grid[i], epsilon) + t_list[it] * smoothed_value(v0, x_grid[i], epsilon);
    return out;
}

struct Peak {
    double location = 0.0;
    double height = 0.0;
};

// Strict local maxima of row t_index on x >= 0, tallest first (ties: nearer
// to 0 first). A grid end counts when it beats its single neighbour, and
// x = 0 counts when it beats x = +h (the row is even). Maxima below 1e-3 of
// the row maximum are dropped as quadrature ripple.
inline std::vector<Peak> peak_metrics(const Field& f, std::size_t t_index) {
    if (t_index >= f.values.size()) throw ValidationError("t_index", "t index out of range");
    const auto& xs = f.x_grid;
    const auto& row = f.values[t_index];
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] >= 0.0) idx.push_back(i);
    if (idx.size() < 3) throw ValidationError("x_grid", "peak_metrics needs at least 3 grid points with x >= 0");
    double gmax = 0.0;
    for (std::size_t i : idx) gmax = std::max(gmax, row[i]);
    std::vector<Peak> peaks;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const std::size_t i = idx[k];
        const bool left = k == 0 ? true : row[i] > row[idx[k - 1]];
        const bool right = k + 1 == idx.size() ? true : row[i] > row[idx[k + 1]];
        if (left && right && row[i] >= 1e-3 * gmax && row[i] > 0.0) peaks.push_back({xs[i], row[i]});
    }
    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        if (a.height != b.height) return a.height > b.height;
        return a.location < b.location;
    });
    return peaks;
}

} // namespace fzwave
