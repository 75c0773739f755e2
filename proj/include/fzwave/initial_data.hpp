#pragma once

// Initial displacement / velocity profiles and the three views the solvers
// need of them: point values, Fourier transform, and convolution with the
// Gaussian delta-net delta_eps(x) = exp(-x^2/eps^2) / (eps sqrt(pi)).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fracops.hpp"

namespace fzwave {

using cplx = std::complex<double>;

inline double delta_eps(double x, double eps) {
    return std::exp(-(x * x) / (eps * eps)) / (eps * std::sqrt(std::numbers::pi));
}

struct InitialData {
    // none: identically zero
    // dirac: height * delta(x - center)
    // gaussian: height * exp(-((x - center)/width)^2)
    // box: height on |x - center| <= width/2
    // sampled: piecewise-linear through `samples`, zero outside
    enum class Kind { none, dirac, gaussian, box, sampled };

    Kind kind = Kind::none;
    double center = 0.0;
    double width = 1.0;
    double height = 1.0;
    SampledSignal samples;

    static InitialData zero() { return {}; }
    static InitialData dirac(double center = 0.0, double height = 1.0) {
        return {Kind::dirac, center, 0.0, height, {}};
    }
    static InitialData gaussian(double center, double width, double height = 1.0) {
        return {Kind::gaussian, center, width, height, {}};
    }
    static InitialData box(double center, double width, double height = 1.0) {
        return {Kind::box, center, width, height, {}};
    }
    static InitialData sampled(SampledSignal s) { return {Kind::sampled, 0.0, 0.0, 1.0, std::move(s)}; }

    bool is_zero() const { return kind == Kind::none || height == 0.0; }
};

inline const char* kind_name(InitialData::Kind k) {
    switch (k) {
    case InitialData::Kind::none: return "none";
    case InitialData::Kind::dirac: return "dirac";
    case InitialData::Kind::gaussian: return "gaussian";
    case InitialData::Kind::box: return "box";
    case InitialData::Kind::sampled: return "sampled";
    }
    return "?";
}

inline InitialData::Kind parse_kind(const std::string& s) {
    if (s == "none" || s == "zero") return InitialData::Kind::none;
    if (s == "dirac") return InitialData::Kind::dirac;
    if (s == "gaussian") return InitialData::Kind::gaussian;
    if (s == "box") return InitialData::Kind::box;
    if (s == "sampled") return InitialData::Kind::sampled;
    throw ValidationError("kind", "unknown initial-data kind '" + s + "' (none|dirac|gaussian|box|sampled)");
}

namespace detail {

// trapezoid weights of a (possibly non-uniform) grid
inline std::vector<double> trapezoid_weights(const std::vector<double>& g) {
    std::vector<double> w(g.size(), 0.0);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        const double h = 0.5 * (g[i + 1] - g[i]);
        w[i] += h;
        w[i + 1] += h;
    }
    return w;
}

} // namespace detail

inline void validate_initial(const InitialData& d, const char* name) {
    using K = InitialData::Kind;
    if (!std::isfinite(d.center) || !std::isfinite(d.height))
        throw ValidationError(name, std::string(name) + ": center and height must be finite");
    if ((d.kind == K::gaussian || d.kind == K::box) && !(d.width > 0.0))
        throw ValidationError(std::string(name) + ".width", "(0,inf)", d.width);
    if (d.kind == K::dirac && !d.samples.grid.empty())
        throw ValidationError(name, std::string(name) + ": dirac data carries no samples");
    if (d.kind == K::sampled) {
        const auto& s = d.samples;
        if (s.grid.size() < 2 || s.grid.size() != s.values.size())
            throw ValidationError(std::string(name) + ".samples", "sampled data needs >= 2 matching grid/values");
        double mass = 0.0;
        auto w = detail::trapezoid_weights(s.grid);
        for (std::size_t i = 0; i < w.size(); ++i) mass += w[i] * std::abs(s.values[i]);
        if (!std::isfinite(mass)) throw ValidationError(std::string(name) + ".samples", "sampled data not integrable");
    }
}

// u(x) itself (dirac data has no point values; the caller regularizes it)
inline double point_value(const InitialData& d, double x) {
    using K = InitialData::Kind;
    switch (d.kind) {
    case K::none: return 0.0;
    case K::dirac: throw DomainError("point_value: dirac data has no point values");
    case K::gaussian: {
        const double z = (x - d.center) / d.width;
        return d.height * std::exp(-z * z);
    }
    case K::box: return std::abs(x - d.center) <= 0.5 * d.width ? d.height : 0.0;
    case K::sampled: {
        const auto& g = d.samples.grid;
        const auto& v = d.samples.values;
        if (x < g.front() || x > g.back()) return 0.0;
        auto it = std::upper_bound(g.begin(), g.end(), x);
        if (it == g.end()) return v.back();
        const std::size_t j = static_cast<std::size_t>(it - g.begin());
        const double s = (x - g[j - 1]) / (g[j] - g[j - 1]);
        return v[j - 1] + s * (v[j] - v[j - 1]);
    }
    }
    return 0.0;
}

// (u * delta_eps)(x)
inline double smoothed_value(const InitialData& d, double x, double eps) {
    using K = InitialData::Kind;
    switch (d.kind) {
    case K::none: return 0.0;
    case K::dirac: return d.height * delta_eps(x - d.center, eps);
    case K::gaussian: {
        const double s2 = d.width * d.width + eps * eps;
        const double z = x - d.center;
        return d.height * d.width / std::sqrt(s2) * std::exp(-z * z / s2);
    }
    case K::box: {
        const double z = x - d.center, h = 0.5 * d.width;
        return 0.5 * d.height * (std::erf((z + h) / eps) - std::erf((z - h) / eps));
    }
    case K::sampled: {
        const auto& g = d.samples.grid;
        const auto w = detail::trapezoid_weights(g);
        double acc = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) acc += w[j] * d.samples.values[j] * delta_eps(x - g[j], eps);
        return acc;
    }
    }
    return 0.0;
}

// uhat(xi) = int u(y) exp(-i xi y) dy
inline cplx fourier(const InitialData& d, double xi) {
    using K = InitialData::Kind;
    const cplx shift = std::polar(1.0, -xi * d.center);
    switch (d.kind) {
    case K::none: return 0.0;
    case K::dirac: return d.height * shift;
    case K::gaussian: {
        const double w = d.width;
        return d.height * w * std::sqrt(std::numbers::pi) * std::exp(-0.25 * xi * xi * w * w) * shift;
    }
    case K::box: {
        const double h = 0.5 * xi * d.width;
        const double sinc = h == 0.0 ? 1.0 : std::sin(h) / h;
        return d.height * d.width * sinc * shift;
    }
    case K::sampled: {
        const auto& g = d.samples.grid;
        const auto w = detail::trapezoid_weights(g);
        cplx acc = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) acc += w[j] * d.samples.values[j] * std::polar(1.0, -xi * g[j]);
        return acc;
    }
    }
    return 0.0;
}

// Half-width of the region outside which the data (after smoothing with
// delta_eps) is negligible, measured from 0.
inline double data_reach(const InitialData& d, double eps) {
    using K = InitialData::Kind;
    switch (d.kind) {
    case K::none: return 0.0;
    case K::dirac: return std::abs(d.center) + 9.0 * eps;
    case K::gaussian: return std::abs(d.center) + 9.0 * std::sqrt(d.width * d.width + eps * eps);
    case K::box: return std::abs(d.center) + 0.5 * d.width + 9.0 * eps;
    case K::sampled:
        return std::max(std::abs(d.samples.grid.front()), std::abs(d.samples.grid.back())) + 9.0 * eps;
    }
    return 0.0;
}

} // namespace fzwave
