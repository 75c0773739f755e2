#pragma once

#include <cmath>

#include "errors.hpp"

namespace fzwave {

// Dimensionless parameter set. beta = 1 is admitted (own kernel route);
// alpha = 1 is not.
struct ModelParams {
    double alpha = 0.25;
    double beta = 0.45;
    double tau = 0.1;
    double epsilon = 0.01;
};

struct PhysicalParams {
    double density = 1.0;    // mass / length
    double modulus = 1.0;    // generalized Young modulus, Pa m^(beta-1)
    double tau_sigma = 0.1;  // s^alpha
    double tau_eps = 1.0;    // s^alpha
    double alpha = 0.5;
    double beta = 0.5;
};

// Physical = scale * dimensionless.
struct Scales {
    double length_scale = 1.0;
    double time_scale = 1.0;
    double displacement_scale = 1.0;
    double stress_scale = 1.0;
};

inline ModelParams validate_model(const ModelParams& p) {
    if (!(p.alpha >= 0.0 && p.alpha < 1.0)) throw ValidationError("alpha", "[0,1)", p.alpha);
    if (!(p.beta >= 0.0 && p.beta <= 1.0)) throw ValidationError("beta", "[0,1]", p.beta);
    if (!(p.tau > 0.0 && p.tau < 1.0)) throw ValidationError("tau", "(0,1)", p.tau);
    if (!(p.epsilon > 0.0 && p.epsilon <= 1.0)) throw ValidationError("epsilon", "(0,1]", p.epsilon);
    return p;
}

inline PhysicalParams validate_physical(const PhysicalParams& p) {
    if (!(p.density > 0.0) || !std::isfinite(p.density)) throw ValidationError("density", "(0,inf)", p.density);
    if (!(p.modulus > 0.0) || !std::isfinite(p.modulus)) throw ValidationError("modulus", "(0,inf)", p.modulus);
    if (!(p.tau_sigma > 0.0)) throw ValidationError("tau_sigma", "(0,inf)", p.tau_sigma);
    if (!(p.tau_eps > 0.0)) throw ValidationError("tau_eps", "(0,inf)", p.tau_eps);
    if (!(p.tau_sigma < p.tau_eps))
        throw ValidationError("tau_sigma", "(0,tau_eps) (thermodynamic restriction tau_sigma < tau_eps)",
                              p.tau_sigma);
    if (!(p.alpha >= 0.0 && p.alpha < 1.0)) throw ValidationError("alpha", "[0,1)", p.alpha);
    if (!(p.beta >= 0.0 && p.beta <= 1.0)) throw ValidationError("beta", "[0,1]", p.beta);
    return p;
}

struct Dimensionless {
    ModelParams model;
    Scales scales;
};

// x = L xbar, t = T tbar, u = L ubar, sigma = E L^(1-beta) sigmabar with
// T = tau_eps^(1/alpha) and L = (tau_eps^(2/alpha) density/modulus)^(1/(1+beta)).
inline Dimensionless nondimensionalize(const PhysicalParams& p, double epsilon = 0.01) {
    validate_physical(p);
    if (p.alpha == 0.0) throw DomainError("nondimensionalize: time scale tau_eps^(1/alpha) undefined at alpha = 0");
    Dimensionless out;
    out.model = {p.alpha, p.beta, p.tau_sigma / p.tau_eps, epsilon};
    validate_model(out.model);
    const double T = std::pow(p.tau_eps, 1.0 / p.alpha);
    // log form keeps tau_eps^(2/alpha) from overflowing for small alpha
    const double logL = (2.0 / p.alpha * std::log(p.tau_eps) + std::log(p.density) - std::log(p.modulus)) /
                        (1.0 + p.beta);
    const double L = std::exp(logL);
    out.scales.time_scale = T;
    out.scales.length_scale = L;
    out.scales.displacement_scale = L;
    out.scales.stress_scale = p.modulus * std::exp((1.0 - p.beta) * logL);
    return out;
}

inline double to_physical_length(const Scales& s, double xbar) { return s.length_scale * xbar; }
inline double to_physical_time(const Scales& s, double tbar) { return s.time_scale * tbar; }
inline double to_dimensionless_length(const Scales& s, double x) { return x / s.length_scale; }
inline double to_dimensionless_time(const Scales& s, double t) { return t / s.time_scale; }

} // namespace fzwave
