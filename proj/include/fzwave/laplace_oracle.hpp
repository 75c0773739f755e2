#pragma once

// Independent inversion of s K~hat(rho, s) = s / (s^2 + theta F(s)) on the
// Bromwich line s = s0 + i p. Used only to certify the residue-plus-branch
// assembly of spectral_kernel.
//
// The slowly decaying part is removed analytically:
//   s/(s^2 + theta F) = 1/s - theta/(tau s^3) + g(s),   g = O(s^(-3-a)),
// with inverses 1 and -theta t^2/(2 tau); only g goes through the trapezoid
// rule. The rule is spectrally accurate in the step (aliasing error
// ~ exp(-s0 * 2 pi / h)), so node doubling serves as the convergence check
// and the one Richardson step changes nothing once both levels agree.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "kernel.hpp"
#include "parallel.hpp"
#include "params.hpp"

namespace fzwave {

struct BromwichConfig {
    double s0 = 1.0;
    double p_max = 1e4;
    std::size_t n_nodes = 0;  // nodes on [0, p_max] at the coarse level; 0 = step 2 pi s0 / 30
    double rel_tol = 1e-7;
    double abs_tol = 1e-8;
};

namespace detail {

// trapezoid over [-p_max, p_max] with n + 1 nodes on each half; returns the
// complex value of (1/2pi) int g(s0+ip) e^{ipt} dp
inline cplx bromwich_trapezoid(double rho, double t, const ModelParams& p, const BromwichConfig& c, std::size_t n) {
    const double th = theta_of_rho(rho, p.beta);
    const double h = c.p_max / static_cast<double>(n);
    auto g = [&](double pp) {
        const cplx s(c.s0, pp);
        return s / (s * s + th * zener_ratio(s, p.alpha, p.tau)) - 1.0 / s + th / (p.tau * s * s * s);
    };
    constexpr std::size_t kChunk = 4096;
    const std::size_t n_chunks = (2 * n + 1 + kChunk - 1) / kChunk;
    std::vector<cplx> partial(n_chunks, 0.0);
    parallel_for(n_chunks, [&](std::size_t ic) {
        cplx acc = 0.0;
        const std::size_t lo = ic * kChunk, hi = std::min(2 * n + 1, lo + kChunk);
        for (std::size_t j = lo; j < hi; ++j) {
            const double pp = (static_cast<double>(j) - static_cast<double>(n)) * h;
            const double w = (j == 0 || j == 2 * n) ? 0.5 * h : h;
            acc += w * g(pp) * std::polar(1.0, pp * t);
        }
        partial[ic] = acc;
    });
    cplx sum = 0.0;
    for (const cplx& v : partial) sum += v;
    return sum / (2.0 * std::numbers::pi);
}

} // namespace detail

inline double bromwich_invert(double rho, double t, const ModelParams& p, const BromwichConfig& c = {}) {
    validate_model(p);
    if (!(rho >= 0.0)) throw DomainError("bromwich_invert: rho must be >= 0");
    if (!(c.s0 > 0.0)) throw ValidationError("s0", "(0,inf)", c.s0);
    if (!(t >= 1e-3)) throw DomainError("bromwich_invert: t below the guard 1e-3");
    if (!(c.p_max >= 100.0 * std::max(1.0, 1.0 / t)))
        throw ValidationError("p_max", "p_max must be >= 100 max(1, 1/t)");
    const double th = theta_of_rho(rho, p.beta);
    if (th == 0.0) return 1.0;

    // tail beyond p_max, both halves: |g| ~ C p^(-3-a) bounds it by
    // |g(p_max)| p_max/(2+a); the e^{ipt} oscillation by 2|g(p_max)|/t
    const double amp = std::exp(c.s0 * t);
    const cplx s_end(c.s0, c.p_max);
    const double g_end = std::abs(s_end / (s_end * s_end + th * zener_ratio(s_end, p.alpha, p.tau)) - 1.0 / s_end +
                                  th / (p.tau * s_end * s_end * s_end));
    const double tail = amp * g_end * std::min(c.p_max / (2.0 + p.alpha), 2.0 / t) / std::numbers::pi;
    if (tail > c.abs_tol) throw NumericalError("bromwich_invert: truncation tail above abs_tol; raise p_max", tail);

    std::size_t n = c.n_nodes;
    if (n == 0) n = static_cast<std::size_t>(std::ceil(c.p_max / (2.0 * std::numbers::pi * c.s0 / 30.0)));
    const cplx coarse = amp * detail::bromwich_trapezoid(rho, t, p, c, n);
    const cplx fine = amp * detail::bromwich_trapezoid(rho, t, p, c, 2 * n);
    const cplx rich = (4.0 * fine - coarse) / 3.0;
    const double diff = std::abs(fine - coarse);
    if (diff > std::max(c.abs_tol, c.rel_tol * std::abs(rich)))
        throw NumericalError("bromwich_invert: node doubling did not converge", diff);
    const double value = 1.0 - th * t * t / (2.0 * p.tau) + rich.real();
    if (std::abs(rich.imag()) > 1e-6 * std::max(1.0, std::abs(value)))
        throw NumericalError("bromwich_invert: imaginary part above tolerance", std::abs(rich.imag()));
    return value;
}

} // namespace fzwave
