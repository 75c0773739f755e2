#pragma once

// The conjugate zero pair of Psi and its certification by the argument
// principle. Only the representative with Im s > 0 is stored.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "charfun.hpp"
#include "errors.hpp"

namespace fzwave {

struct Rect {
    double x0, x1, y0, y1;
};

struct ZeroPair {
    cplx s_z;
    double residual = 0.0;
    bool winding_checked = false;
    int iterations = 0;
    // |Re s_z| < 1e-9 with alpha > 0: the zero sits on the imaginary axis
    // to working precision, which only the alpha = 0 case should produce.
    bool boundary_warning = false;
};

struct WindingResult {
    int winding = 0;
    std::size_t nodes = 0;
    int perturbations = 0;
};

namespace detail {

struct ZeroNearContour {};

// One piece of a closed contour. `side` selects the boundary value when the
// piece runs along the cut: +1 upper side (arg = pi), -1 lower side.
struct Piece {
    std::function<cplx(double)> z;
    int side;
};

inline cplx psi_on(cplx s, int side, const CharParams& p) {
    if (p.alpha > 0.0 && on_cut(s)) {
        const double q = -s.real();
        if (q == 0.0) return cplx(p.theta, 0.0);
        auto [up, lo] = branch_values(q, p.alpha, p.tau);
        return q * q + p.theta * (side >= 0 ? up : lo);
    }
    return psi(s, p);
}

class ArgumentTracker {
public:
    ArgumentTracker(const CharParams& p, std::size_t budget) : p_(p), budget_(budget) {}

    double total() const { return total_; }
    std::size_t nodes() const { return nodes_; }

    void run(const Piece& piece) {
        constexpr int kInitial = 16;
        double ua = 0.0;
        cplx fa = eval(piece, ua);
        for (int i = 1; i <= kInitial; ++i) {
            const double ub = static_cast<double>(i) / kInitial;
            cplx fb = eval(piece, ub);
            refine(piece, ua, ub, fa, fb, 0);
            ua = ub;
            fa = fb;
        }
    }

private:
    cplx eval(const Piece& piece, double u) {
        if (++nodes_ > budget_)
            throw NumericalError("winding_number: zero too close to contour (node budget exhausted)",
                                 static_cast<double>(nodes_));
        const cplx s = piece.z(u);
        const cplx v = psi_on(s, piece.side, p_);
        if (!(p_.alpha > 0.0 && on_cut(s))) {
            const double slope = std::abs(psi_prime(s, p_));
            if (std::abs(v) < 1e-8 * std::max(slope, 1e-300)) throw ZeroNearContour{};
        }
        return v;
    }

    void refine(const Piece& piece, double ua, double ub, cplx fa, cplx fb, int depth) {
        const double d = std::arg(fb / fa);
        if (std::abs(d) < std::numbers::pi / 2.0 || depth > 60) {
            total_ += d;
            return;
        }
        const double um = 0.5 * (ua + ub);
        const cplx fm = eval(piece, um);
        refine(piece, ua, um, fa, fm, depth + 1);
        refine(piece, um, ub, fm, fb, depth + 1);
    }

    const CharParams& p_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    double total_ = 0.0;
};

inline Piece segment(cplx a, cplx b, int side) {
    return {[a, b](double u) { return a + (b - a) * u; }, side};
}

// Counter-clockwise boundary of r; pieces lying on the cut get the side of
// the rectangle's interior.
inline std::vector<Piece> rect_pieces(const Rect& r, int interior_side) {
    const cplx a(r.x0, r.y0), b(r.x1, r.y0), c(r.x1, r.y1), d(r.x0, r.y1);
    return {segment(a, b, +1), segment(b, c, interior_side), segment(c, d, -1), segment(d, a, interior_side)};
}

// Rectangle straddling the negative real axis with x1 > 0: go around the
// outside, then in along the upper side of the cut, round the origin on a
// small circle, and back out along the lower side.
inline std::vector<Piece> keyhole_pieces(const Rect& r) {
    const double delta = std::min(1e-9, 0.5 * r.x1);
    const cplx a(r.x0, r.y0), b(r.x1, r.y0), c(r.x1, r.y1), d(r.x0, r.y1);
    std::vector<Piece> out{segment(a, b, 0), segment(b, c, 0), segment(c, d, 0)};
    out.push_back(segment(d, cplx(r.x0, 0.0), +1));
    out.push_back(segment(cplx(r.x0, 0.0), cplx(-delta, 0.0), +1));
    // angle from pi down to -pi through 0; polar() keeps the end points a
    // hair off the axis on the correct sides
    out.push_back({[delta](double u) { return std::polar(delta, std::numbers::pi * (1.0 - 2.0 * u)); }, 0});
    out.push_back(segment(cplx(-delta, 0.0), cplx(r.x0, 0.0), -1));
    out.push_back(segment(cplx(r.x0, 0.0), a, -1));
    return out;
}

inline int count_winding(const std::vector<Piece>& pieces, const CharParams& p, std::size_t budget,
                         std::size_t& nodes) {
    ArgumentTracker tr(p, budget);
    for (const auto& pc : pieces) tr.run(pc);
    nodes += tr.nodes();
    return static_cast<int>(std::lround(tr.total() / (2.0 * std::numbers::pi)));
}

} // namespace detail

inline WindingResult winding_detail(Rect r, const CharParams& p, std::size_t budget = 200000) {
    detail::check_char_params(p);
    if (!(r.x1 > r.x0 && r.y1 > r.y0)) throw DomainError("winding_number: degenerate rectangle");
    WindingResult out;
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            const bool straddles = p.alpha > 0.0 && r.x0 < 0.0 && r.y0 < 0.0 && r.y1 > 0.0;
            if (!straddles) {
                const int side = r.y0 >= 0.0 ? +1 : -1;
                out.winding = detail::count_winding(detail::rect_pieces(r, side), p, budget, out.nodes);
            } else if (r.x1 > 0.0) {
                out.winding = detail::count_winding(detail::keyhole_pieces(r), p, budget, out.nodes);
            } else {
                Rect upper{r.x0, r.x1, 0.0, r.y1}, lower{r.x0, r.x1, r.y0, 0.0};
                out.winding = detail::count_winding(detail::rect_pieces(upper, +1), p, budget, out.nodes) +
                              detail::count_winding(detail::rect_pieces(lower, -1), p, budget, out.nodes);
            }
            return out;
        } catch (const detail::ZeroNearContour&) {
            // nudge every edge outward by a small, attempt-dependent amount
            const double h = 1e-6 * std::max(r.x1 - r.x0, r.y1 - r.y0) * (attempt + 1);
            r = {r.x0 - h, r.x1 + 0.7 * h, r.y0 - 0.3 * h, r.y1 + 1.1 * h};
            ++out.perturbations;
        }
    }
    throw NumericalError("winding_number: zero too close to contour", 0.0);
}

inline int winding_number(const Rect& r, const CharParams& p, std::size_t budget = 200000) {
    return winding_detail(r, p, budget).winding;
}

struct RootOptions {
    bool certify = true;
    std::optional<cplx> guess;
    int max_newton = 100;
};

// Search window of the fallback and of the certification sweep.
inline Rect search_window(const CharParams& p) {
    const double M = std::max(1.0, 2.0 * std::sqrt(p.theta));
    return {-4.0 * M, 1e-9, 1e-9, 4.0 * M};
}

namespace detail {

inline bool newton(const CharParams& p, cplx& s, int max_iter, int& iterations) {
    double res = std::abs(psi(s, p));
    for (int it = 0; it < max_iter; ++it) {
        iterations = it + 1;
        const cplx ds = psi(s, p) / psi_prime(s, p);
        if (!std::isfinite(ds.real()) || !std::isfinite(ds.imag())) return false;
        double lambda = 1.0;
        cplx trial = s - ds;
        double trial_res = trial.imag() > 0.0 ? std::abs(psi(trial, p)) : HUGE_VAL;
        for (int h = 0; h < 20 && !(trial_res < res || trial_res == 0.0); ++h) {
            lambda *= 0.5;
            trial = s - lambda * ds;
            trial_res = trial.imag() > 0.0 ? std::abs(psi(trial, p)) : HUGE_VAL;
        }
        const bool stalled = !(trial_res < res || trial_res == 0.0);
        const double step = std::abs(lambda * ds);
        if (!stalled) {
            s = trial;
            res = trial_res;
        }
        if (lambda == 1.0 && step <= 1e-13 * std::max(1.0, std::abs(s))) return true;
        if (stalled) {
            // residual at rounding level: accept if the full step is tiny
            return std::abs(ds) <= 1e-12 * std::max(1.0, std::abs(s));
        }
    }
    return false;
}

inline cplx bisect_on_winding(const CharParams& p, int max_depth) {
    Rect box = search_window(p);
    if (winding_number(box, p) != 1)
        throw NumericalError("find_zero_pair: search window does not enclose exactly one zero", 0.0);
    for (int depth = 0; depth < max_depth; ++depth) {
        Rect a = box, b = box;
        if (box.x1 - box.x0 >= box.y1 - box.y0) {
            const double m = 0.5 * (box.x0 + box.x1);
            a.x1 = m;
            b.x0 = m;
        } else {
            const double m = 0.5 * (box.y0 + box.y1);
            a.y1 = m;
            b.y0 = m;
        }
        box = winding_number(a, p) == 1 ? a : b;
        if (std::max(box.x1 - box.x0, box.y1 - box.y0) < 1e-6 * std::max(1.0, std::abs(cplx(box.x0, box.y0))))
            break;
    }
    return {0.5 * (box.x0 + box.x1), 0.5 * (box.y0 + box.y1)};
}

} // namespace detail

// Winding number over a square of half-width h around s, h small enough to
// exclude the conjugate zero and the cut.
inline int certify_zero(cplx s, const CharParams& p) {
    const double h = 0.25 * std::min(s.imag(), std::max(std::abs(s), 1e-300));
    return winding_number({s.real() - h, s.real() + h, s.imag() - h, s.imag() + h}, p);
}

inline ZeroPair find_zero_pair(const CharParams& p, const RootOptions& opt = {}) {
    detail::check_char_params(p);
    if (!(p.theta > 0.0)) throw ValidationError("theta", "(0,inf)", p.theta);
    ZeroPair out;
    const cplx s_alpha0(0.0, std::sqrt(2.0 * p.theta / (1.0 + p.tau)));
    if (p.alpha == 0.0) {
        out.s_z = s_alpha0;
    } else {
        cplx s = opt.guess.value_or(s_alpha0);
        if (!(s.imag() > 0.0)) s = s_alpha0;
        bool ok = detail::newton(p, s, opt.max_newton, out.iterations);
        if (!ok && opt.guess) {
            s = s_alpha0;
            ok = detail::newton(p, s, opt.max_newton, out.iterations);
        }
        if (!ok) {
            s = detail::bisect_on_winding(p, 60);
            int extra = 0;
            if (!detail::newton(p, s, opt.max_newton, extra))
                throw NumericalError("find_zero_pair: Newton failed after winding bisection",
                                     std::abs(psi(s, p)));
            out.iterations += extra;
        }
        out.s_z = s;
        out.boundary_warning = std::abs(s.real()) < 1e-9;
    }
    out.residual = std::abs(psi(out.s_z, p));
    if (out.residual > 1e-10 * std::max(1.0, std::norm(out.s_z)))
        throw NumericalError("find_zero_pair: residual above tolerance", out.residual);
    if (opt.certify) {
        if (certify_zero(out.s_z, p) != 1)
            throw NumericalError("find_zero_pair: certification winding number is not 1", out.residual);
        out.winding_checked = true;
    }
    return out;
}

} // namespace fzwave
