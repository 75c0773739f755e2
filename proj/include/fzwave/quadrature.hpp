#pragma once

// Adaptive Gauss-Kronrod (7/15) integration for real- or complex-valued
// integrands, plus fixed-order Gauss-Legendre panels. Node tables come from
// Boost.Math; the adaptive driver is ours so that it can carry complex values,
// user breakpoints and a hard evaluation budget, and so that the summation
// order is fixed (results are bit-reproducible).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace fzwave::quad {

template <class T>
struct Result {
    T value{};
    double error = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

struct Segment {
    double a, b;
    double error;
    std::size_t slot;
};

struct ByError {
    bool operator()(const Segment& l, const Segment& r) const {
        if (l.error != r.error) return l.error < r.error;
        return l.slot > r.slot;
    }
};

// 15-point Kronrod estimate and |K - G| as the error.
template <class T, class F>
std::pair<T, double> gk15(F& f, double a, double b) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G = boost::math::quadrature::gauss<double, 7>;
    static const auto& x = GK::abscissa();
    static const auto& wk = GK::weights();
    static const auto& wg = G::weights();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * wk[0];
    T gauss = fc * wg[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        T pair = f(c - h * x[i]) + f(c + h * x[i]);
        kron += pair * wk[i];
        if (i % 2 == 0) gauss += pair * wg[i / 2];
    }
    kron *= h;
    gauss *= h;
    return {kron, magnitude(kron - gauss)};
}

} // namespace detail

// Integrate f over [breaks.front(), breaks.back()], starting from the
// subintervals between consecutive breakpoints and bisecting the worst one
// until the summed error estimate is below max(abs_tol, rel_tol*|I|).
template <class T, class F>
Result<T> adaptive(F&& f, const std::vector<double>& breaks, double abs_tol, double rel_tol,
                   std::size_t max_evals = 200000) {
    Result<T> out;
    std::vector<T> values;
    std::vector<double> errors;
    std::vector<char> live;
    std::priority_queue<detail::Segment, std::vector<detail::Segment>, detail::ByError> heap;

    auto add = [&](double a, double b) {
        auto [v, e] = detail::gk15<T>(f, a, b);
        out.evals += 15;
        values.push_back(v);
        errors.push_back(e);
        live.push_back(1);
        heap.push({a, b, e, values.size() - 1});
    };
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (breaks[i + 1] > breaks[i]) add(breaks[i], breaks[i + 1]);

    auto totals = [&]() {
        T sum{};
        double err = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (live[i]) {
                sum += values[i];
                err += errors[i];
            }
        return std::pair<T, double>{sum, err};
    };

    auto [sum, err] = totals();
    while (!heap.empty()) {
        if (err <= std::max(abs_tol, rel_tol * detail::magnitude(sum))) {
            out.converged = true;
            break;
        }
        if (out.evals + 30 > max_evals) break;
        detail::Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 64 * std::numeric_limits<double>::epsilon() *
                                      std::max(std::abs(worst.a), std::abs(worst.b))) {
            // Cannot split further; accept what this piece has.
            heap.pop();
            continue;
        }
        heap.pop();
        live[worst.slot] = 0;
        sum -= values[worst.slot];
        err -= errors[worst.slot];
        add(worst.a, mid);
        add(mid, worst.b);
        sum += values[values.size() - 2] + values.back();
        err += errors[errors.size() - 2] + errors.back();
        if (values.size() % 256 == 0) std::tie(sum, err) = totals();
    }
    std::tie(sum, err) = totals();
    if (!out.converged) out.converged = err <= std::max(abs_tol, rel_tol * detail::magnitude(sum));
    out.value = sum;
    out.error = err;
    return out;
}

template <class T, class F>
Result<T> adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                   std::size_t max_evals = 200000) {
    return adaptive<T>(std::forward<F>(f), std::vector<double>{a, b}, abs_tol, rel_tol, max_evals);
}

// [a, inf) through x = a + L*u/(1-u); `scale` L should match the decay length.
template <class T, class F>
Result<T> adaptive_to_infinity(F&& f, double a, double scale, double abs_tol, double rel_tol,
                               std::size_t max_evals = 200000) {
    auto g = [&](double u) -> T {
        if (u >= 1.0) return T{};
        const double om = 1.0 - u;
        const double x = a + scale * u / om;
        T v = f(x);
        if (detail::magnitude(v) == 0.0) return T{};
        return v * (scale / (om * om));
    };
    return adaptive<T>(g, 0.0, 1.0, abs_tol, rel_tol, max_evals);
}

// Fixed-order Gauss-Legendre rule expanded to full node/weight lists on [-1,1].
template <unsigned N>
struct GaussLegendre {
    std::vector<double> x, w;
    GaussLegendre() {
        using G = boost::math::quadrature::gauss<double, N>;
        const auto& a = G::abscissa();
        const auto& wt = G::weights();
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] == 0.0) continue;
            x.push_back(-a[i]);
            w.push_back(wt[i]);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            x.push_back(a[i]);
            w.push_back(wt[i]);
        }
    }
};

template <unsigned N>
const GaussLegendre<N>& gauss_legendre() {
    static const GaussLegendre<N> rule;
    return rule;
}

// Append the nodes and weights of an N-point rule on [a,b].
template <unsigned N>
void append_panel(double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
    const auto& r = gauss_legendre<N>();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        nodes.push_back(c + h * r.x[i]);
        weights.push_back(h * r.w[i]);
    }
}

} // namespace fzwave::quad
