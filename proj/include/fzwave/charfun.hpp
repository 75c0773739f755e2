#pragma once

// Characteristic function Psi(s) = s^2 + theta (1+s^a)/(1+tau s^a) with the
// principal branch of s^a (cut on (-inf,0]), its derivative, the boundary
// values of the Zener ratio on both sides of the cut, and the spatial symbol
// theta(rho) = rho^(1+beta) sin(beta pi/2).

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "errors.hpp"

namespace fzwave {

using cplx = std::complex<double>;

struct CharParams {
    double alpha = 0.25;
    double tau = 0.1;
    double theta = 1.0;
};

namespace detail {

inline bool on_cut(cplx s) { return s.imag() == 0.0 && s.real() <= 0.0; }

inline void check_char_params(const CharParams& p) {
    if (!(p.alpha >= 0.0 && p.alpha < 1.0)) throw ValidationError("alpha", "[0,1)", p.alpha);
    if (!(p.tau > 0.0 && p.tau < 1.0)) throw ValidationError("tau", "(0,1)", p.tau);
    if (!(p.theta >= 0.0) || !std::isfinite(p.theta)) throw ValidationError("theta", "[0,inf)", p.theta);
}

} // namespace detail

// (1 + s^a) / (1 + tau s^a)
inline cplx zener_ratio(cplx s, double alpha, double tau) {
    if (alpha == 0.0) return cplx(2.0 / (1.0 + tau), 0.0);
    if (detail::on_cut(s)) throw DomainError("zener_ratio: s lies on the branch cut (-inf,0]; use branch_values");
    const cplx z = std::pow(s, alpha);
    return (1.0 + z) / (1.0 + tau * z);
}

inline cplx psi(cplx s, const CharParams& p) {
    if (p.alpha > 0.0 && detail::on_cut(s)) throw DomainError("psi: s lies on the branch cut (-inf,0]");
    return s * s + p.theta * zener_ratio(s, p.alpha, p.tau);
}

// 2s + theta a (1-tau) s^(a-1) / (1 + tau s^a)^2
inline cplx psi_prime(cplx s, const CharParams& p) {
    if (p.alpha == 0.0) return 2.0 * s;
    if (detail::on_cut(s)) throw DomainError("psi_prime: s lies on the branch cut (-inf,0]");
    const cplx z = std::pow(s, p.alpha);
    const cplx d = 1.0 + p.tau * z;
    return 2.0 * s + p.theta * p.alpha * (1.0 - p.tau) * (z / s) / (d * d);
}

// Psi from its polar decomposition s = r e^{i phi}, phi in (-pi, pi).
inline cplx psi_polar(cplx s, const CharParams& p) {
    if (p.alpha > 0.0 && detail::on_cut(s)) throw DomainError("psi_polar: s lies on the branch cut (-inf,0]");
    const double r = std::abs(s), phi = std::arg(s), a = p.alpha, tau = p.tau;
    const double ra = std::pow(r, a), c = std::cos(a * phi), sn = std::sin(a * phi);
    const double den = 1.0 + 2.0 * tau * ra * c + tau * tau * ra * ra;
    const double re = r * r * std::cos(2.0 * phi) + p.theta * (1.0 + (1.0 + tau) * ra * c + tau * ra * ra) / den;
    const double im = r * r * std::sin(2.0 * phi) + p.theta * (1.0 - tau) * ra * sn / den;
    return {re, im};
}

// Limits of the Zener ratio at s = q e^{+i pi} (upper side) and q e^{-i pi}.
inline std::pair<cplx, cplx> branch_values(double q, double alpha, double tau) {
    if (!(q > 0.0)) throw DomainError("branch_values: q must be > 0");
    if (alpha == 0.0) {
        const cplx v(2.0 / (1.0 + tau), 0.0);
        return {v, v};
    }
    const double qa = std::pow(q, alpha);
    const cplx z = qa * std::polar(1.0, alpha * std::numbers::pi);
    const cplx up = (1.0 + z) / (1.0 + tau * z);
    return {up, std::conj(up)};
}

inline double theta_of_rho(double rho, double beta) {
    if (!(rho >= 0.0)) throw DomainError("theta_of_rho: rho must be >= 0");
    if (beta == 0.0 || rho == 0.0) return 0.0;
    return std::pow(rho, 1.0 + beta) * std::sin(beta * std::numbers::pi / 2.0);
}

} // namespace fzwave
