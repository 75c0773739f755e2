#pragma once

// Mittag-Leffler functions E_{a,b}(z) for 0 < a <= 1 on the negative real
// axis and a small complex neighbourhood of it, and the fractional
// relaxation function e_a(t) = E_a(-t^a/tau).
//
// Three evaluation routes, tried in order, each with its own error estimate:
//   1. power series (|z| <= switch_radius), compensated summation; rejected
//      when cancellation makes it ill-conditioned
//   2. asymptotic series -sum z^-k / Gamma(b - a k), truncated at its
//      smallest term
//   3. for real z < 0, a < 1, b < 1 + a: the real integral representation
//        E_{a,b}(-x) = 1/(a pi) int_0^inf r^((1-b)/a) exp(-r^(1/a))
//                      [r sin(pi(1-b)) + x sin(pi(1-b+a))]
//                      / (r^2 + 2 r x cos(a pi) + x^2) dr
// Route 3 is what keeps small-a arguments such as E_{1/4}(-10) accurate:
// there the series peaks around 10^4340 and the asymptotic series stalls at
// ~1e-3 relative.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"

namespace fzwave {

using cplx = std::complex<double>;

struct MLParams {
    double series_tol = 1e-12;
    double switch_radius = 5.0;
};

namespace detail {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 1/Gamma(x), zero at the poles.
inline double rgamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x > 170.0) return std::exp(-std::lgamma(x));
    return 1.0 / std::tgamma(x);
}

struct MLEstimate {
    cplx value;
    double rel_err;
};

template <class T>
struct Kahan {
    T sum{}, comp{};
    void add(T v) {
        T y = v - comp;
        T t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

inline MLEstimate ml_series(double a, double b, cplx z) {
    Kahan<cplx> acc;
    double abs_sum = 0.0;
    const double r = std::abs(z);
    // terms keep growing until (a k)^a exceeds |z| (roughly)
    const double k_peak = r > 1.0 ? std::pow(r, 1.0 / a) / a : 0.0;
    cplx power = 1.0;
    double last = 0.0;
    for (int k = 0; k < 200000; ++k) {
        cplx term = power * rgamma(a * k + b);
        acc.add(term);
        abs_sum += std::abs(term);
        last = std::abs(term);
        if (k > k_peak + 2 && last <= 1e-3 * kEps * std::abs(acc.sum)) break;
        if (k > k_peak + 2 && last == 0.0) break;
        power *= z;
        if (!std::isfinite(std::abs(power))) return {acc.sum, std::numeric_limits<double>::infinity()};
    }
    const double mag = std::abs(acc.sum);
    const double err = 8.0 * kEps * abs_sum + last;
    return {acc.sum, mag > 0.0 ? err / mag : std::numeric_limits<double>::infinity()};
}

inline MLEstimate ml_asymptotic(double a, double b, cplx z) {
    cplx sum = 0.0;
    cplx zinv = 1.0 / z;
    cplx power = zinv;
    double prev = std::numeric_limits<double>::infinity();
    double omitted = std::numeric_limits<double>::infinity();
    // The exponential contribution is present only inside |arg z| <= a pi.
    // Just outside that sector (a > 2/3 on the negative axis) it is absent
    // from the expansion but not negligible, so it enters the error estimate.
    const double phase = std::abs(std::arg(z));
    const double pi = std::numbers::pi;
    double stokes = 0.0;
    if (phase <= a * pi) {
        sum += (1.0 / a) * std::pow(z, (1.0 - b) / a) * std::exp(std::pow(z, 1.0 / a));
    } else if (phase < 1.5 * a * pi) {
        const double r = std::abs(z);
        stokes = (1.0 / a) * std::pow(r, (1.0 - b) / a) * std::exp(std::pow(r, 1.0 / a) * std::cos(phase / a));
    }
    for (int k = 1; k < 400; ++k) {
        cplx term = power * rgamma(b - a * k);
        const double mag = std::abs(term);
        // look one term further when hitting a pole of Gamma
        double next = std::abs(power * zinv * rgamma(b - a * (k + 1)));
        double scale = std::max(mag, next);
        if (scale > prev) {
            omitted = scale;
            break;
        }
        sum -= term;
        if (mag != 0.0) prev = mag;
        power *= zinv;
        if (scale < kEps * std::abs(sum) * 1e-3) {
            omitted = scale;
            break;
        }
    }
    const double m = std::abs(sum);
    return {sum, m > 0.0 ? (omitted + stokes) / m : std::numeric_limits<double>::infinity()};
}

inline MLEstimate ml_negative_axis_integral(double a, double b, double x, double tol) {
    const double pi = std::numbers::pi;
    const double s1 = std::sin(pi * (1.0 - b));
    const double s2 = std::sin(pi * (1.0 - b + a));
    const double c = std::cos(a * pi);
    const double p = (1.0 - b) / a;
    auto f = [&](double r) {
        if (r <= 0.0) return 0.0;
        const double num = r * s1 + x * s2;
        const double den = r * r + 2.0 * r * x * c + x * x;
        return std::pow(r, p) * std::exp(-std::pow(r, 1.0 / a)) * num / den;
    };
    // exp(-r^(1/a)) < 1e-300 beyond r = 700^a
    const double r_max = std::pow(700.0, a);
    std::vector<double> breaks{0.0};
    // near a = 1 the denominator has a near-double zero at r = x, of
    // relative width sqrt(2 (1 + cos(a pi)))
    const double w = std::sqrt(2.0 * (1.0 + c));
    std::vector<double> cand{0.5 * x, x, 2.0 * x, 1.0};
    for (double k : {1.0, 4.0, 16.0, 64.0})
        if (k * w < 0.5) {
            cand.push_back(x * (1.0 - k * w));
            cand.push_back(x * (1.0 + k * w));
        }
    std::sort(cand.begin(), cand.end());
    for (double q : cand)
        if (q > breaks.back() && q < r_max) breaks.push_back(q);
    breaks.push_back(r_max);
    auto res = quad::adaptive<double>(f, breaks, 0.0, 0.5 * tol, 400000);
    const double v = res.value / (a * pi);
    const double err = res.error / (a * pi);
    return {cplx(v, 0.0), v != 0.0 ? std::abs(err / v) : std::numeric_limits<double>::infinity()};
}

} // namespace detail

inline cplx mittag_leffler(double a, double b, cplx z, const MLParams& cfg = {}) {
    if (!(a > 0.0 && a <= 1.0)) throw ValidationError("ml_alpha", "(0,1]", a);
    if (!(b > 0.0)) throw ValidationError("ml_beta", "(0,inf)", b);
    if (!(cfg.series_tol > 0.0 && cfg.series_tol <= 1e-6))
        throw ValidationError("series_tol", "(0,1e-6]", cfg.series_tol);
    if (!(cfg.switch_radius > 1.0)) throw ValidationError("switch_radius", "(1,inf)", cfg.switch_radius);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("mittag_leffler: non-finite argument");

    if (z == cplx(0.0)) return detail::rgamma(b);
    if (a == 1.0 && b == 1.0) return std::exp(z);
    if (a == 1.0 && b == 2.0 && std::abs(z) > 0.0) {
        if (z.imag() == 0.0) return std::expm1(z.real()) / z.real();
        return (std::exp(z) - 1.0) / z;
    }

    const double tol = cfg.series_tol;
    const double r = std::abs(z);
    detail::MLEstimate best{cplx(0.0), std::numeric_limits<double>::infinity()};
    auto consider = [&](const detail::MLEstimate& e) {
        if (e.rel_err < best.rel_err) best = e;
        return e.rel_err <= tol;
    };

    if (r <= cfg.switch_radius && consider(detail::ml_series(a, b, z))) return best.value;
    if (r > 1.0 && consider(detail::ml_asymptotic(a, b, z))) return best.value;
    const bool on_negative_axis = z.real() < 0.0 && std::abs(z.imag()) <= 1e-14 * r;
    if (on_negative_axis && a < 1.0 && b < 1.0 + a) {
        if (consider(detail::ml_negative_axis_integral(a, b, -z.real(), tol))) return best.value;
    }
    if (r > cfg.switch_radius && consider(detail::ml_series(a, b, z))) return best.value;
    throw NumericalError("mittag_leffler: tolerance unreachable in the implemented regime", best.rel_err);
}

inline double mittag_leffler(double a, double b, double x, const MLParams& cfg = {}) {
    return mittag_leffler(a, b, cplx(x, 0.0), cfg).real();
}

// e_a(t) = E_a(-t^a / tau)
inline double e_alpha(double t, double alpha, double tau, const MLParams& cfg = {}) {
    if (!(t >= 0.0)) throw DomainError("e_alpha: t must be >= 0");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("alpha", "(0,1]", alpha);
    if (!(tau > 0.0)) throw ValidationError("tau", "(0,1)", tau);
    if (t == 0.0) return 1.0;
    return mittag_leffler(alpha, 1.0, -std::pow(t, alpha) / tau, cfg);
}

// d/dt e_a(t) = -(t^(a-1)/tau) E_{a,a}(-t^a/tau)
inline double e_alpha_prime(double t, double alpha, double tau, const MLParams& cfg = {}) {
    if (!(t > 0.0)) throw DomainError("e_alpha_prime: t must be > 0");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("alpha", "(0,1]", alpha);
    if (!(tau > 0.0)) throw ValidationError("tau", "(0,1)", tau);
    const double ta = std::pow(t, alpha);
    return -(ta / t / tau) * mittag_leffler(alpha, alpha, -ta / tau, cfg);
}

} // namespace fzwave
