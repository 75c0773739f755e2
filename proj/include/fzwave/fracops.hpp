#pragma once

// Discrete fractional operators on uniformly sampled signals:
//   caputo_derivative      left Caputo derivative from 0, L1 product integration
//   symmetrized_derivative spectral, symbol i xi |xi|^(beta-1) sin(beta pi/2)
//   l_operator_apply       (1/tau) f + (1/tau - 1) (e_a' * f)

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include <fftw3.h>

#include "errors.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace fzwave {

struct SampledSignal {
    std::vector<double> grid;
    std::vector<double> values;
    bool uniform = false;

    std::size_t size() const { return grid.size(); }
    double step() const { return grid.size() > 1 ? grid[1] - grid[0] : 0.0; }
};

inline SampledSignal make_signal(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() != values.size()) throw ValidationError("values", "grid and values lengths differ");
    if (grid.empty()) throw ValidationError("grid", "empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw ValidationError("grid", "grid must be strictly increasing");
    SampledSignal s{std::move(grid), std::move(values), true};
    if (s.size() > 1) {
        const double h = s.step();
        for (std::size_t i = 1; i < s.size(); ++i)
            if (std::abs((s.grid[i] - s.grid[i - 1]) - h) > 1e-10 * std::abs(h)) {
                s.uniform = false;
                break;
            }
    }
    return s;
}

// n points t_i = t0 + i h
inline SampledSignal make_uniform(double t0, double h, std::vector<double> values) {
    if (!(h > 0.0)) throw ValidationError("step", "(0,inf)", h);
    std::vector<double> grid(values.size());
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = t0 + static_cast<double>(i) * h;
    return SampledSignal{std::move(grid), std::move(values), true};
}

namespace detail {

inline void require_uniform(const SampledSignal& f, const char* op) {
    if (!f.uniform) throw ValidationError("grid", std::string(op) + ": grid must be uniform");
}

inline void require_time_grid(const SampledSignal& f, const char* op) {
    require_uniform(f, op);
    if (f.size() < 3) throw ValidationError("grid", std::string(op) + ": at least 3 samples needed");
    if (std::abs(f.grid[0]) > 1e-12 * f.step())
        throw ValidationError("grid", std::string(op) + ": time grid must start at 0");
}

// FFTW planning is not thread-safe; execution on distinct plans is.
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace detail

// L1 scheme: D^a f(t_n) ~ h^-a / Gamma(2-a) sum_{j<n} b_{n-1-j} (f_{j+1} - f_j),
// b_k = (k+1)^(1-a) - k^(1-a). Exact for piecewise-linear f.
inline SampledSignal caputo_derivative(const SampledSignal& f, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw ValidationError("alpha", "[0,1)", alpha);
    detail::require_time_grid(f, "caputo_derivative");
    if (alpha == 0.0) return f;
    const std::size_t n = f.size();
    const double h = f.step();
    std::vector<double> b(n);
    for (std::size_t k = 0; k < n; ++k)
        b[k] = std::pow(static_cast<double>(k + 1), 1.0 - alpha) - std::pow(static_cast<double>(k), 1.0 - alpha);
    std::vector<double> df(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) df[j] = f.values[j + 1] - f.values[j];
    const double c = std::pow(h, -alpha) / std::tgamma(2.0 - alpha);
    SampledSignal out = f;
    out.values[0] = 0.0;
    for (std::size_t m = 1; m < n; ++m) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += b[m - 1 - j] * df[j];
        out.values[m] = c * acc;
    }
    return out;
}

// Multiplies the DFT by i xi |xi|^(beta-1) sin(beta pi/2). The xi = 0 and
// Nyquist modes are zeroed (the symbol is odd, so a real Nyquist mode has no
// consistent image).
inline SampledSignal symmetrized_derivative(const SampledSignal& f, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw ValidationError("beta", "[0,1]", beta);
    detail::require_uniform(f, "symmetrized_derivative");
    const std::size_t n = f.size();
    if (n < 4) throw ValidationError("grid", "symmetrized_derivative: at least 4 samples needed");
    double peak = 0.0;
    for (double v : f.values) peak = std::max(peak, std::abs(v));
    if (std::abs(f.values.front()) > 1e-12 * std::max(peak, 1e-300) ||
        std::abs(f.values.back()) > 1e-12 * std::max(peak, 1e-300))
        throw DomainError("symmetrized_derivative: signal not decayed at the grid ends (periodic wrap-around)");
    SampledSignal out = f;
    if (beta == 0.0) {
        std::fill(out.values.begin(), out.values.end(), 0.0);
        return out;
    }

    const std::size_t nc = n / 2 + 1;
    std::vector<double> buf(f.values);
    auto* spec = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * nc));
    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf.data(), spec, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, buf.data(), FFTW_ESTIMATE);
    }
    fftw_execute(fwd);
    const double L = f.step() * static_cast<double>(n);
    const double s = std::sin(beta * std::numbers::pi / 2.0);
    for (std::size_t k = 0; k < nc; ++k) {
        const bool nyquist = (n % 2 == 0) && (k == n / 2);
        if (k == 0 || nyquist) {
            spec[k][0] = spec[k][1] = 0.0;
            continue;
        }
        const double xi = 2.0 * std::numbers::pi * static_cast<double>(k) / L;
        const double m = std::pow(xi, beta) * s; // xi |xi|^(beta-1) for xi > 0
        const double re = spec[k][0], im = spec[k][1];
        // multiply by i m
        spec[k][0] = -m * im;
        spec[k][1] = m * re;
    }
    fftw_execute(bwd);
    {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    fftw_free(spec);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = buf[i] / static_cast<double>(n);
    return out;
}

// I_k = int_0^{k h} e_a(t) dt for k = 0..n-1, cell by cell.
inline std::vector<double> relaxation_integral(std::size_t n, double h, double alpha, double tau) {
    std::vector<double> I(n, 0.0);
    auto e = [&](double t) { return e_alpha(t, alpha, tau); };
    for (std::size_t k = 1; k < n; ++k) {
        const double a = static_cast<double>(k - 1) * h, b = static_cast<double>(k) * h;
        auto r = quad::adaptive<double>(e, a, b, 1e-15 * h, 1e-13, 20000);
        I[k] = I[k - 1] + r.value;
    }
    return I;
}

// L f = (1/tau) f + (1/tau - 1) int_0^t e_a'(t-s) f(s) ds.
// The memory integral is rewritten as (e_a * f')(t) + e_a(t) f(0) - f(t),
// which moves the t^(a-1) singularity of e_a' onto the integrable e_a. With
// f piecewise linear, (e_a * f')(t_n) = sum_j (df_j/h) [I_{n-j} - I_{n-j-1}].
// alpha = 0 has L = 2/(1+tau) times the identity.
inline SampledSignal l_operator_apply(const SampledSignal& f, double alpha, double tau) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw ValidationError("alpha", "[0,1)", alpha);
    if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("tau", "(0,1)", tau);
    detail::require_time_grid(f, "l_operator_apply");
    SampledSignal out = f;
    if (alpha == 0.0) {
        for (auto& v : out.values) v *= 2.0 / (1.0 + tau);
        return out;
    }
    const std::size_t n = f.size();
    const double h = f.step();
    const std::vector<double> I = relaxation_integral(n, h, alpha, tau);
    std::vector<double> dI(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) dI[k] = I[k] - I[k - 1];
    std::vector<double> slope(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) slope[j] = (f.values[j + 1] - f.values[j]) / h;
    const double f0 = f.values[0];
    const double c = 1.0 / tau - 1.0;
    for (std::size_t m = 0; m < n; ++m) {
        double conv = 0.0;
        for (std::size_t j = 0; j < m; ++j) conv += slope[j] * dI[m - j];
        const double em = m == 0 ? 1.0 : e_alpha(f.grid[m], alpha, tau);
        const double memory = conv + em * f0 - f.values[m];
        out.values[m] = f.values[m] / tau + c * memory;
    }
    return out;
}

} // namespace fzwave
