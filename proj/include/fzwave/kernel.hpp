#pragma once

// Solution kernels.
//
// Spectral kernel (inverse Laplace transform of s / (s^2 + theta F(s))):
//   S(rho,t) = (1/pi) int_0^inf Im[q / (q^2 + theta F+(q))] e^{-qt} dq
//            + 2 Re[ s e^{st} / Psi'(s) ]_{s = s_z(rho)}
// with F+ the Zener ratio on the upper side of the cut. Its time integral
// W(rho,t) = int_0^t S swaps e^{-qt} q for (1 - e^{-qt}) and s e^{st} for
// e^{st} - 1, term by term.
//
// Regularized kernel:
//   K_eps(x,t) = (1/pi) int_0^inf S(rho,t) cos(rho x) e^{-(eps rho)^2/4} drho
//
// beta = 1 (time-fractional) kernel, Laplace domain in s, closed form in x:
//   K~(x,s) = (f/2) exp(-|x| s f),  f = sqrt((1 + tau s^a)/(1 + s^a)),
// principal square root. It is inverted on a Hankel contour made of the two
// rays arg s = +-phi; phi = pi is the classical branch-cut integral, which
// loses every digit to cancellation near the wave front |x| = t/sqrt(tau).
// Tilting the rays to phi = (pi/2)(1 + a/(2(1-a))) keeps both e^{st} and the
// s^(1-a) part of s f decaying, and the integral stays well conditioned up to
// the front. Beyond the front the kernel vanishes (finite speed 1/sqrt(tau)).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "charfun.hpp"
#include "errors.hpp"
#include "initial_data.hpp"
#include "parallel.hpp"
#include "params.hpp"
#include "quadrature.hpp"
#include "rootfinder.hpp"

namespace fzwave {

struct QuadratureConfig {
    double q_max = 0.0;    // branch-integral truncation; 0 = automatic (e^{-q t} <= 1e-22)
    double rho_max = 0.0;  // Fourier truncation; 0 = (2/eps) sqrt(ln(1/abs_tol))
    double rel_tol = 1e-6;
    double abs_tol = 1e-8;
    int panels_per_period = 8;
    double bromwich_s0 = 1.0;
    double bromwich_p_max = 1e4;
    std::size_t node_budget = 20000000;  // rho nodes
};

inline double auto_rho_max(double eps, double abs_tol) {
    return (2.0 / eps) * std::sqrt(std::log(1.0 / abs_tol));
}

inline QuadratureConfig validate_quadrature(const QuadratureConfig& q, double eps) {
    if (!(q.rel_tol >= 1e-12 && q.rel_tol < 1.0)) throw ValidationError("rel_tol", "[1e-12,1)", q.rel_tol);
    if (!(q.abs_tol > 0.0 && q.abs_tol < 1.0)) throw ValidationError("abs_tol", "(0,1)", q.abs_tol);
    if (!(q.q_max >= 0.0)) throw ValidationError("q_max", "(0,inf) or 0 for automatic", q.q_max);
    if (!(q.rho_max >= 0.0)) throw ValidationError("rho_max", "(0,inf) or 0 for automatic", q.rho_max);
    if (q.rho_max > 0.0) {
        const double tail = std::exp(-0.25 * (eps * q.rho_max) * (eps * q.rho_max));
        if (tail > q.abs_tol)
            throw ValidationError("rho_max", "rho_max too small: exp(-(eps*rho_max)^2/4) must be <= abs_tol");
    }
    if (q.panels_per_period < 4)
        throw ValidationError("panels_per_period", "[4,inf)", static_cast<double>(q.panels_per_period));
    if (!(q.bromwich_s0 > 0.0)) throw ValidationError("bromwich_s0", "(0,inf)", q.bromwich_s0);
    if (!(q.bromwich_p_max > 0.0)) throw ValidationError("bromwich_p_max", "(0,inf)", q.bromwich_p_max);
    if (q.node_budget == 0) throw ValidationError("node_budget", "[1,inf)", 0.0);
    return q;
}

struct SpectralKernel {
    double rho = 0.0;
    double t = 0.0;
    double branch_part = 0.0;
    double residue_part = 0.0;
    double total = 0.0;
    double imag_residual = 0.0;  // |Im| of the complex assembly before it is discarded
};

// How kernel_eps / solve_field pick a formula. `automatic` sends beta = 0 to
// the closed-form delta_eps, beta = 1 (alpha > 0) to the time-fractional
// kernel and alpha = 0 to the cosine spectral kernel; `general` forces the
// residue-plus-branch-cut assembly everywhere it is defined.
enum class Route { automatic, general };

struct Field {
    std::vector<double> x_grid;
    std::vector<double> t_list;
    std::vector<std::vector<double>> values;  // [t index][x index]
    ModelParams model;
    QuadratureConfig quadrature;
    std::string route;
};

// s * K~hat = s / (s^2 + theta F(s))
inline cplx laplace_kernel_hat(double rho, cplx s, const ModelParams& p) {
    validate_model(p);
    const double th = theta_of_rho(rho, p.beta);
    if (p.alpha > 0.0 && detail::on_cut(s)) throw DomainError("laplace_kernel_hat: s lies on the branch cut");
    if (th == 0.0) return 1.0 / s;
    return s / (s * s + th * zener_ratio(s, p.alpha, p.tau));
}

inline double spectral_kernel_alpha0(double rho, double t, double beta, double tau) {
    const double w = std::sqrt(2.0 * theta_of_rho(rho, beta) / (1.0 + tau));
    return std::cos(t * w);
}

namespace detail {

inline double branch_u_max(const QuadratureConfig& q, double t) { return q.q_max > 0.0 ? q.q_max * t : 50.0; }

} // namespace detail

inline SpectralKernel spectral_kernel(double rho, double t, const ModelParams& p, const QuadratureConfig& q = {}) {
    validate_model(p);
    if (!(rho >= 0.0)) throw DomainError("spectral_kernel: rho must be >= 0");
    if (!(t > 0.0)) throw DomainError("spectral_kernel: t must be > 0");
    SpectralKernel out{rho, t};
    const double th = theta_of_rho(rho, p.beta);
    if (th == 0.0) {
        out.residue_part = 1.0;  // the pole of 1/s
        out.total = 1.0;
        return out;
    }
    if (p.alpha == 0.0) {
        out.residue_part = spectral_kernel_alpha0(rho, t, p.beta, p.tau);
        out.total = out.residue_part;
        return out;
    }

    // branch cut, in u = q t; both boundary values kept so that the
    // imaginary part of the assembly is a genuine roundoff check
    auto integrand = [&](double u) -> cplx {
        if (u <= 0.0) return 0.0;
        const double qq = u / t;
        auto [fp, fm] = branch_values(qq, p.alpha, p.tau);
        const cplx jump = 1.0 / (qq * qq + fp * th) - 1.0 / (qq * qq + fm * th);
        return jump * (qq * std::exp(-u) / t) / cplx(0.0, 2.0 * std::numbers::pi);
    };
    const double u_max = detail::branch_u_max(q, t);
    std::vector<double> breaks{0.0};
    const double u_star = t * std::sqrt(th);
    for (double f : {1e-3, 0.25, 0.5, 1.0, 2.0, 4.0})
        if (f * u_star > breaks.back() && f * u_star < u_max) breaks.push_back(f * u_star);
    for (double u : {1.0, 5.0, 20.0})
        if (u > breaks.back() && u < u_max) breaks.push_back(u);
    std::sort(breaks.begin(), breaks.end());
    breaks.push_back(u_max);
    auto br = quad::adaptive<cplx>(integrand, breaks, 1e-14, 1e-12, 400000);
    if (!br.converged && br.error > std::max(q.abs_tol, q.rel_tol * std::abs(br.value)))
        throw NumericalError("spectral_kernel: branch integral did not converge", br.error);

    const ZeroPair zp = find_zero_pair({p.alpha, p.tau, th});
    const CharParams cp{p.alpha, p.tau, th};
    const cplx s = zp.s_z, sc = std::conj(zp.s_z);
    const cplx res = s * std::exp(s * t) / psi_prime(s, cp) + sc * std::exp(sc * t) / psi_prime(sc, cp);

    out.branch_part = br.value.real();
    out.residue_part = res.real();
    out.total = out.branch_part + out.residue_part;
    out.imag_residual = std::abs(br.value.imag() + res.imag());
    if (out.imag_residual > 1e-10 * (1.0 + std::abs(out.total)))
        throw NumericalError("spectral_kernel: assembly not real", out.imag_residual);
    return out;
}

// ---------------------------------------------------------------------------
// Tabulated S and W on a shared rho grid

namespace detail {

// Composite Gauss-Legendre rule for the branch integral in q, with panels
// geometric in q so that both the q^(1+a) onset and the q ~ sqrt(theta)
// crossover are resolved for every rho at once.
struct BranchRule {
    std::vector<double> q, w;
    std::vector<cplx> F;  // upper-side Zener ratio at q
};

inline BranchRule make_branch_rule(double alpha, double tau, double q_lo, double q_hi) {
    BranchRule r;
    constexpr double kRatio = 1.25;
    quad::append_panel<20>(0.0, q_lo, r.q, r.w);
    for (double a = q_lo; a < q_hi; a *= kRatio) quad::append_panel<20>(a, std::min(a * kRatio, q_hi), r.q, r.w);
    r.F.resize(r.q.size());
    for (std::size_t j = 0; j < r.q.size(); ++j) r.F[j] = branch_values(r.q[j], alpha, tau).first;
    return r;
}

struct RhoGrid {
    std::vector<double> rho, w;
};

// Panels of width min(2 pi / (ppp * Omega), 0.5), Omega the largest phase
// rate in rho of cos(rho x) S(rho,t); the first panel is graded towards 0
// where S has a rho^((1+beta)/2) phase.
inline RhoGrid make_rho_grid(double rho_max, double omega, const QuadratureConfig& q) {
    RhoGrid g;
    const double h = std::min(2.0 * std::numbers::pi / (q.panels_per_period * std::max(omega, 1e-300)), 0.5);
    const double n_panels = std::ceil(rho_max / h);
    if (n_panels * 10.0 > static_cast<double>(q.node_budget))
        throw NumericalError("kernel: rho grid exceeds the node budget", n_panels * 10.0);
    const double hh = rho_max / n_panels;
    double a = 0.0;
    for (double b : {hh / 64.0, hh / 16.0, hh / 4.0, hh}) {
        quad::append_panel<10>(a, b, g.rho, g.w);
        a = b;
    }
    for (std::size_t k = 1; k < static_cast<std::size_t>(n_panels); ++k)
        quad::append_panel<10>(static_cast<double>(k) * hh, static_cast<double>(k + 1) * hh, g.rho, g.w);
    return g;
}

// Per-rho data that does not depend on t: theta, zero, 1/Psi'(zero).
struct RhoTable {
    std::vector<double> theta;
    std::vector<cplx> zero, inv_dpsi;
};

inline RhoTable make_rho_table(const std::vector<double>& rho, const ModelParams& p, bool need_zeros) {
    RhoTable tab;
    const std::size_t n = rho.size();
    tab.theta.resize(n);
    tab.zero.assign(n, 0.0);
    tab.inv_dpsi.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) tab.theta[k] = theta_of_rho(rho[k], p.beta);
    if (!need_zeros) return tab;
    parallel_for(n, [&](std::size_t k) {
        if (tab.theta[k] == 0.0) return;
        const CharParams cp{p.alpha, p.tau, tab.theta[k]};
        RootOptions opt;
        opt.certify = false;
        const ZeroPair z = find_zero_pair(cp, opt);
        tab.zero[k] = z.s_z;
        tab.inv_dpsi[k] = 1.0 / psi_prime(z.s_z, cp);
    });
    return tab;
}

enum class SpectralModel { unit, cosine, assembly };

// S(rho_k, t) and, when wanted, W(rho_k, t) for every node.
inline void spectral_rows(const RhoTable& tab, const ModelParams& p, SpectralModel model, double t, bool want_w,
                          const QuadratureConfig& q, std::vector<double>& S, std::vector<double>& W) {
    const std::size_t n = tab.theta.size();
    S.assign(n, 0.0);
    W.assign(n, 0.0);
    if (model == SpectralModel::unit) {
        std::fill(S.begin(), S.end(), 1.0);
        std::fill(W.begin(), W.end(), t);
        return;
    }
    if (model == SpectralModel::cosine) {
        for (std::size_t k = 0; k < n; ++k) {
            const double w = std::sqrt(2.0 * tab.theta[k] / (1.0 + p.tau));
            S[k] = std::cos(w * t);
            W[k] = w == 0.0 ? t : std::sin(w * t) / w;
        }
        return;
    }
    double th_max = 0.0;
    for (double th : tab.theta) th_max = std::max(th_max, th);
    const double qs_hi = detail::branch_u_max(q, t) / t;
    const double qw_hi = want_w ? std::max(qs_hi, 1e4 * std::sqrt(std::max(th_max, 1.0))) : qs_hi;
    const BranchRule rule = make_branch_rule(p.alpha, p.tau, 1e-10 * std::min(1.0, 1.0 / t), qw_hi);
    std::vector<double> ws(rule.q.size()), ww(rule.q.size());
    std::size_t ns = 0;
    for (std::size_t j = 0; j < rule.q.size(); ++j) {
        const double qt = rule.q[j] * t;
        ws[j] = std::exp(-qt) * rule.w[j] / std::numbers::pi;
        ww[j] = -std::expm1(-qt) * rule.w[j] / std::numbers::pi;
        if (rule.q[j] <= qs_hi) ns = j + 1;
    }
    parallel_for(n, [&](std::size_t k) {
        const double th = tab.theta[k];
        if (th == 0.0) {
            S[k] = 1.0;
            W[k] = t;
            return;
        }
        double bs = 0.0, bw = 0.0;
        for (std::size_t j = 0; j < ns; ++j) {
            const double qq = rule.q[j];
            bs += ws[j] * (qq / (qq * qq + rule.F[j] * th)).imag();
        }
        if (want_w)
            for (std::size_t j = 0; j < rule.q.size(); ++j) {
                const double qq = rule.q[j];
                bw += ww[j] * (1.0 / (qq * qq + rule.F[j] * th)).imag();
            }
        const cplx s = tab.zero[k];
        const cplx est = std::exp(s * t);
        S[k] = bs + 2.0 * (s * est * tab.inv_dpsi[k]).real();
        W[k] = bw + 2.0 * ((est - 1.0) * tab.inv_dpsi[k]).real();
    });
}

// u(x,t) = (1/pi) int_0^inf e^{-(eps rho)^2/4} [S Re(u0^ e^{i rho x}) + W Re(v0^ e^{i rho x})] drho
inline Field spectral_field(const InitialData& u0, const InitialData& v0, const std::vector<double>& x_grid,
                            const std::vector<double>& t_list, const ModelParams& p, const QuadratureConfig& q,
                            SpectralModel model) {
    Field out{x_grid, t_list, {}, p, q, ""};
    const double eps = p.epsilon;
    const double rho_max = q.rho_max > 0.0 ? q.rho_max : auto_rho_max(eps, q.abs_tol);
    double x_abs = 0.0;
    for (double x : x_grid) x_abs = std::max(x_abs, std::abs(x));
    const double reach = std::max(u0.is_zero() ? 0.0 : data_reach(u0, 0.0), v0.is_zero() ? 0.0 : data_reach(v0, 0.0));
    const double t_max = *std::max_element(t_list.begin(), t_list.end());
    const double speed = model == SpectralModel::unit ? 0.0 : 1.0 / std::sqrt(p.tau);
    const RhoGrid grid = make_rho_grid(rho_max, x_abs + reach + t_max * speed + 1.0, q);
    const std::size_t n = grid.rho.size();

    const bool want_u = !u0.is_zero(), want_v = !v0.is_zero();
    std::vector<cplx> uh(n, 0.0), vh(n, 0.0);
    std::vector<double> damp(n);
    parallel_for(n, [&](std::size_t k) {
        const double r = grid.rho[k];
        damp[k] = grid.w[k] * std::exp(-0.25 * (eps * r) * (eps * r)) / std::numbers::pi;
        if (want_u) uh[k] = fourier(u0, r);
        if (want_v) vh[k] = fourier(v0, r);
    });
    bool even = true;
    for (std::size_t k = 0; k < n && even; ++k) even = uh[k].imag() == 0.0 && vh[k].imag() == 0.0;

    const RhoTable tab = make_rho_table(grid.rho, p, model == SpectralModel::assembly);
    std::vector<double> S, W, A(n), B(n);
    out.values.assign(t_list.size(), std::vector<double>(x_grid.size(), 0.0));
    for (std::size_t it = 0; it < t_list.size(); ++it) {
        spectral_rows(tab, p, model, t_list[it], want_v, q, S, W);
        for (std::size_t k = 0; k < n; ++k) {
            A[k] = damp[k] * (S[k] * uh[k].real() + W[k] * vh[k].real());
            B[k] = damp[k] * (S[k] * uh[k].imag() + W[k] * vh[k].imag());
        }
        auto& row = out.values[it];
        if (even) {
            // cosine transform: one evaluation per distinct |x|
            std::map<double, std::size_t> slot;
            std::vector<double> keys;
            for (double x : x_grid)
                if (slot.emplace(std::abs(x), keys.size()).second) keys.push_back(std::abs(x));
            std::vector<double> vals(keys.size());
            parallel_for(keys.size(), [&](std::size_t i) {
                double acc = 0.0;
                for (std::size_t k = 0; k < n; ++k) acc += A[k] * std::cos(grid.rho[k] * keys[i]);
                vals[i] = acc;
            });
            for (std::size_t i = 0; i < x_grid.size(); ++i) row[i] = vals[slot[std::abs(x_grid[i])]];
        } else {
            parallel_for(x_grid.size(), [&](std::size_t i) {
                const double x = x_grid[i];
                double acc = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double ph = grid.rho[k] * x;
                    acc += A[k] * std::cos(ph) - B[k] * std::sin(ph);
                }
                row[i] = acc;
            });
        }
    }
    return out;
}

inline void check_grid(const std::vector<double>& x_grid, const std::vector<double>& t_list) {
    if (x_grid.empty()) throw ValidationError("x_grid", "x grid is empty");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (!(x_grid[i] > x_grid[i - 1])) throw ValidationError("x_grid", "x grid must be strictly increasing");
    if (t_list.empty()) throw ValidationError("t_list", "t list is empty");
    for (double t : t_list)
        if (!(t > 0.0) || !std::isfinite(t)) throw ValidationError("t_list", "(0,inf)", t);
}

} // namespace detail

// ---------------------------------------------------------------------------
// beta = 1

namespace detail {

inline double tf_ray_angle(double alpha) {
    return std::min(std::numbers::pi, 0.5 * std::numbers::pi * (1.0 + alpha / (2.0 * (1.0 - alpha))));
}

// K_{a,1}(x,t), or its time integral when `integrated`.
inline double tf_point(double x, double t, double alpha, double tau, bool integrated, double abs_tol) {
    const double ax = std::abs(x);
    const double lag = t - ax * std::sqrt(tau);
    if (!(lag > 0.0)) return 0.0;
    const double phi = tf_ray_angle(alpha);
    const cplx dir = std::polar(1.0, phi);
    auto G = [&](cplx s) {
        const cplx z = std::pow(s, alpha);
        const cplx f = std::sqrt((1.0 + tau * z) / (1.0 + z));
        return 0.5 * f * std::exp(s * t - ax * s * f);
    };
    auto integrand = [&](double r) -> double {
        if (r <= 0.0) return 0.0;
        const cplx s = r * dir;
        const cplx g = G(s);
        return integrated ? g.imag() / r : (g * dir).imag();
    };
    // decay length: linear part r |cos phi| lag, fractional part ~ r^(1-a)
    const double lin = std::abs(std::cos(phi)) * lag;
    const double frac = ax * std::sqrt(tau) * (1.0 / tau - 1.0) * 0.5 * std::cos((1.0 - alpha) * phi);
    double scale = 1.0 / std::max(lin, 1e-12);
    if (frac > 0.0) scale = std::min(scale, std::pow(1.0 / frac, 1.0 / (1.0 - alpha)));
    scale = std::clamp(scale, 1e-3, 1e6);
    auto res = quad::adaptive_to_infinity<double>(integrand, 0.0, scale, 1e-3 * abs_tol, 1e-10, 400000);
    if (!res.converged && res.error > abs_tol)
        throw NumericalError("kernel_time_fractional: ray integral did not converge", res.error);
    double v = res.value / std::numbers::pi;
    if (integrated) v += phi / (2.0 * std::numbers::pi);
    return v;
}

// int K(y,t) su0(x-y) dy + int W(y,t) sv0(x-y) dy with su0, sv0 the data
// smoothed by delta_eps.
inline double tf_convolved(double x, double t, const InitialData& u0, const InitialData& v0, const ModelParams& p,
                           double abs_tol) {
    const double eps = p.epsilon;
    const double front = t / std::sqrt(p.tau);
    double total = 0.0;
    for (int which = 0; which < 2; ++which) {
        const InitialData& d = which == 0 ? u0 : v0;
        if (d.is_zero()) continue;
        const double reach = data_reach(d, eps);
        // su(x - y) is negligible for |x - y - c| beyond the data extent
        const double lo = std::max(-front, x - reach - std::abs(d.center));
        const double hi = std::min(front, x + reach + std::abs(d.center));
        if (!(hi > lo)) continue;
        std::vector<double> br{lo, hi};
        auto add = [&](double b) {
            if (b > lo && b < hi) br.push_back(b);
        };
        add(0.0);
        add(x - d.center);
        if (d.kind == InitialData::Kind::box) {
            add(x - d.center - 0.5 * d.width);
            add(x - d.center + 0.5 * d.width);
        }
        for (double k : {-4.0, -2.0, -1.0, 1.0, 2.0, 4.0}) add(x - d.center + k * eps);
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end()), br.end());
        const bool integrated = which == 1;
        auto f = [&](double y) {
            const double su = smoothed_value(d, x - y, eps);
            if (su == 0.0) return 0.0;
            return tf_point(y, t, p.alpha, p.tau, integrated, abs_tol) * su;
        };
        auto r = quad::adaptive<double>(f, br, abs_tol, 1e-9, 2000000);
        if (!r.converged && r.error > 10.0 * abs_tol)
            throw NumericalError("kernel_time_fractional: x-convolution did not converge", r.error);
        total += r.value;
    }
    return total;
}

inline Field tf_field(const InitialData& u0, const InitialData& v0, const std::vector<double>& x_grid,
                      const std::vector<double>& t_list, const ModelParams& p, const QuadratureConfig& q) {
    Field out{x_grid, t_list, {}, p, q, "time_fractional"};
    out.values.assign(t_list.size(), std::vector<double>(x_grid.size(), 0.0));
    const bool even = (u0.is_zero() || u0.center == 0.0) && (v0.is_zero() || v0.center == 0.0) &&
                      u0.kind != InitialData::Kind::sampled && v0.kind != InitialData::Kind::sampled;
    for (std::size_t it = 0; it < t_list.size(); ++it) {
        auto& row = out.values[it];
        if (even) {
            std::map<double, std::size_t> slot;
            std::vector<double> keys;
            for (double x : x_grid)
                if (slot.emplace(std::abs(x), keys.size()).second) keys.push_back(std::abs(x));
            std::vector<double> vals(keys.size());
            parallel_for(keys.size(),
                         [&](std::size_t i) { vals[i] = tf_convolved(keys[i], t_list[it], u0, v0, p, q.abs_tol); });
            for (std::size_t i = 0; i < x_grid.size(); ++i) row[i] = vals[slot[std::abs(x_grid[i])]];
        } else {
            parallel_for(x_grid.size(),
                         [&](std::size_t i) { row[i] = tf_convolved(x_grid[i], t_list[it], u0, v0, p, q.abs_tol); });
        }
    }
    return out;
}

} // namespace detail

// Unregularized time-fractional kernel K_{a,1}(x,t) (and its time integral).
inline double time_fractional_point(double x, double t, double alpha, double tau, bool integrated = false,
                                    double abs_tol = 1e-12) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha", "(0,1)", alpha);
    if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("tau", "(0,1)", tau);
    if (!(t > 0.0)) throw DomainError("time_fractional_point: t must be > 0");
    return detail::tf_point(x, t, alpha, tau, integrated, abs_tol);
}

inline Field kernel_time_fractional(const std::vector<double>& x_grid, const std::vector<double>& t_list, double alpha,
                                    double tau, double epsilon, const QuadratureConfig& q = {}) {
    ModelParams p{alpha, 1.0, tau, epsilon};
    validate_model(p);
    if (!(alpha > 0.0)) throw ValidationError("alpha", "(0,1)", alpha);
    validate_quadrature(q, epsilon);
    detail::check_grid(x_grid, t_list);
    return detail::tf_field(InitialData::dirac(), InitialData::zero(), x_grid, t_list, p, q);
}

inline Field kernel_classical(const std::vector<double>& x_grid, const std::vector<double>& t_list, double tau,
                              double epsilon) {
    if (!(tau > 0.0)) throw ValidationError("tau", "(0,inf)", tau);
    if (!(epsilon > 0.0)) throw ValidationError("epsilon", "(0,1]", epsilon);
    if (x_grid.empty() || t_list.empty()) throw ValidationError("grid", "empty grid");
    const double c = std::sqrt(2.0 / (1.0 + tau));
    Field out{x_grid, t_list, {}, ModelParams{0.0, 1.0, tau, epsilon}, {}, "classical"};
    out.values.assign(t_list.size(), std::vector<double>(x_grid.size()));
    for (std::size_t it = 0; it < t_list.size(); ++it)
        for (std::size_t i = 0; i < x_grid.size(); ++i) {
            const double x = x_grid[i], ct = c * t_list[it];
            out.values[it][i] = 0.5 * (delta_eps(x + ct, epsilon) + delta_eps(x - ct, epsilon));
        }
    return out;
}

namespace detail {

inline std::string route_name(const ModelParams& p, Route route) {
    if (route == Route::general) return p.beta == 0.0 ? "general(unit)" : p.alpha == 0.0 ? "general(cosine)" : "general";
    if (p.beta == 0.0) return "nonpropagating";
    if (p.alpha == 0.0) return "cosine";
    if (p.beta == 1.0) return "time_fractional";
    return "general";
}

// Solution field for data (u0, v0); kernel_eps is the case u0 = delta, v0 = 0.
inline Field field(const InitialData& u0, const InitialData& v0, const std::vector<double>& x_grid,
                   const std::vector<double>& t_list, const ModelParams& p, const QuadratureConfig& q, Route route) {
    validate_model(p);
    validate_quadrature(q, p.epsilon);
    check_grid(x_grid, t_list);
    validate_initial(u0, "u0");
    validate_initial(v0, "v0");
    const std::string name = route_name(p, route);
    Field out;
    if (route == Route::automatic && p.beta == 0.0) {
        out = Field{x_grid, t_list, {}, p, q, name};
        out.values.assign(t_list.size(), std::vector<double>(x_grid.size()));
        for (std::size_t it = 0; it < t_list.size(); ++it)
            for (std::size_t i = 0; i < x_grid.size(); ++i)
                out.values[it][i] = smoothed_value(u0, x_grid[i], p.epsilon) +
                                    t_list[it] * smoothed_value(v0, x_grid[i], p.epsilon);
    } else if (route == Route::automatic && p.beta == 1.0 && p.alpha > 0.0) {
        out = tf_field(u0, v0, x_grid, t_list, p, q);
    } else {
        SpectralModel m = p.beta == 0.0 ? SpectralModel::unit
                          : p.alpha == 0.0 ? SpectralModel::cosine
                                           : SpectralModel::assembly;
        out = spectral_field(u0, v0, x_grid, t_list, p, q, m);
    }
    out.route = name;
    for (const auto& row : out.values)
        for (double v : row)
            if (!std::isfinite(v)) throw NumericalError("field: non-finite value", HUGE_VAL);
    return out;
}

} // namespace detail

inline Field kernel_eps(const std::vector<double>& x_grid, const std::vector<double>& t_list, const ModelParams& p,
                        const QuadratureConfig& q = {}, Route route = Route::automatic) {
    return detail::field(InitialData::dirac(), InitialData::zero(), x_grid, t_list, p, q, route);
}

inline std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

} // namespace fzwave
