#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <fzwave/solver.hpp>

using namespace fzwave;

namespace {
const ModelParams ref_params{0.25, 0.45, 0.1, 0.01};
}

TEST(InitialData, SmoothedAndFourier) {
    const auto g = InitialData::gaussian(0.3, 0.2, 2.0);
    // Gaussian convolved with delta_eps stays Gaussian
    const double s2 = 0.04 + 1e-4;
    EXPECT_NEAR(smoothed_value(g, 0.5, 0.01), 2.0 * 0.2 / std::sqrt(s2) * std::exp(-0.04 / s2), 1e-14);
    EXPECT_NEAR(point_value(g, 0.5), 2.0 * std::exp(-1.0), 1e-15);
    const auto b = InitialData::box(0.0, 1.0);
    EXPECT_NEAR(smoothed_value(b, 0.0, 0.01), 1.0, 1e-14);
    EXPECT_NEAR(smoothed_value(b, 0.5, 0.01), 0.5, 1e-14);
    EXPECT_LT(std::abs(fourier(b, 0.0) - 1.0), 1e-15);
    EXPECT_THROW(point_value(InitialData::dirac(), 0.0), DomainError);
    // sampled data: trapezoid transform of a hat function
    const auto hat = InitialData::sampled(make_signal({-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}));
    EXPECT_LT(std::abs(fourier(hat, 0.0) - 1.0), 1e-15);
    EXPECT_NEAR(point_value(hat, 0.5), 0.5, 1e-15);
    EXPECT_EQ(parse_kind("gaussian"), InitialData::Kind::gaussian);
    EXPECT_THROW(parse_kind("sinc"), ValidationError);
}

TEST(InitialData, Validation) {
    EXPECT_THROW(validate_initial(InitialData::gaussian(0.0, 0.0), "u0"), ValidationError);
    InitialData s;
    s.kind = InitialData::Kind::sampled;
    EXPECT_THROW(validate_initial(s, "u0"), ValidationError);
    InitialData d = InitialData::dirac();
    d.samples = make_signal({0.0, 1.0}, {1.0, 1.0});
    EXPECT_THROW(validate_initial(d, "u0"), ValidationError);
}

TEST(Solve, DiracIsTheKernel) {
    const auto xs = linspace(-1.0, 1.0, 41);
    const Field a = solve_field(InitialData::dirac(), InitialData::zero(), xs, {0.5, 1.0}, ref_params);
    const Field b = kernel_eps(xs, {0.5, 1.0}, ref_params);
    EXPECT_EQ(a.values, b.values);
}

TEST(Solve, ZeroData) {
    const auto xs = linspace(-1.0, 1.0, 11);
    const Field f = solve_field(InitialData::zero(), InitialData::zero(), xs, {1.0}, ref_params);
    for (double v : f.values[0]) EXPECT_EQ(v, 0.0);
}

TEST(Solve, NonPropagating) {
    ModelParams p = ref_params;
    p.beta = 0.0;
    const auto g = InitialData::gaussian(0.2, 0.3), h = InitialData::box(-0.1, 0.4, 0.5);
    const auto xs = linspace(-1.0, 1.0, 41);
    const Field f = solve_field(g, h, xs, {2.0}, p);
    const Field q = solve_field(g, h, xs, {2.0}, p, {}, Route::general);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double exact = smoothed_value(g, xs[i], 0.01) + 2.0 * smoothed_value(h, xs[i], 0.01);
        EXPECT_NEAR(f.values[0][i], exact, 1e-14);
        EXPECT_NEAR(q.values[0][i], exact, 1e-6);
    }
}

TEST(Solve, NonPropClosedForm) {
    const auto xs = linspace(-0.05, 0.05, 11);
    const Field a = nonprop_solution(InitialData::zero(), InitialData::dirac(), xs, {2.0}, 0.01);
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_DOUBLE_EQ(a.values[0][i], 2.0 * delta_eps(xs[i], 0.01));
    const auto b = InitialData::box(0.0, 1.0);
    const Field c = nonprop_solution(b, b, {0.0}, {1.0}, 0.01);
    EXPECT_NEAR(c.values[0][0], 2.0, 1e-12);
}

// velocity data goes through W = int_0^t S; compare with the time
// integral of the displacement response taken numerically
TEST(Solve, VelocityIsTimeIntegral) {
    const auto g = InitialData::gaussian(0.0, 0.2);
    const std::vector<double> xs{0.0, 0.4, 0.9};
    const Field w = solve_field(InitialData::zero(), g, xs, {1.0}, ref_params);
    std::vector<double> ts;
    const int n = 40;
    for (int k = 1; k <= n; ++k) ts.push_back(static_cast<double>(k) / n);
    const Field u = solve_field(g, InitialData::zero(), xs, ts, ref_params);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // Simpson on [0,1] with u(x,0) = smoothed g
        double acc = smoothed_value(g, xs[i], 0.01) + u.values[n - 1][i];
        for (int k = 1; k < n; ++k) acc += (k % 2 ? 4.0 : 2.0) * u.values[k - 1][i];
        EXPECT_NEAR(w.values[0][i], acc / (3.0 * n), 1e-5) << xs[i];
    }
}

TEST(Solve, Linearity) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const auto xs = linspace(-1.0, 1.0, 21);
    const auto g1 = InitialData::gaussian(0.1, 0.2), g2 = InitialData::gaussian(-0.3, 0.1);
    const double a = U(rng), b = U(rng);
    auto scaled = [](InitialData d, double c) {
        d.height *= c;
        return d;
    };
    const Field f1 = solve_field(g1, g2, xs, {0.7}, ref_params);
    const Field f2 = solve_field(g2, g1, xs, {0.7}, ref_params);
    const Field fa = solve_field(scaled(g1, a), scaled(g2, a), xs, {0.7}, ref_params);
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_NEAR(fa.values[0][i], a * f1.values[0][i], 1e-10);
    // sampled data path, off-centre: sum of two responses
    std::vector<double> gx, gv1, gv2, gs;
    for (int k = -40; k <= 40; ++k) {
        const double x = 0.2 + 0.01 * k;
        gx.push_back(x);
        gv1.push_back(std::exp(-std::pow((x - 0.2) / 0.1, 2)));
        gv2.push_back(std::abs(x - 0.2) < 0.2 ? 1.0 : 0.0);
        gs.push_back(a * gv1.back() + b * gv2.back());
    }
    const auto s1 = InitialData::sampled(make_signal(gx, gv1)), s2 = InitialData::sampled(make_signal(gx, gv2)),
               ss = InitialData::sampled(make_signal(gx, gs));
    const Field r1 = solve_field(s1, InitialData::zero(), xs, {0.7}, ref_params);
    const Field r2 = solve_field(s2, InitialData::zero(), xs, {0.7}, ref_params);
    const Field rs = solve_field(ss, InitialData::zero(), xs, {0.7}, ref_params);
    for (std::size_t i = 0; i < xs.size(); ++i)
        EXPECT_NEAR(rs.values[0][i], a * r1.values[0][i] + b * r2.values[0][i], 1e-10);
    (void)f2;
}

TEST(Peaks, GaussianAndClassical) {
    const auto xs = linspace(-1.0, 1.0, 201);
    const Field d = nonprop_solution(InitialData::dirac(), InitialData::zero(), xs, {1.0}, 0.01);
    const auto pk = peak_metrics(d, 0);
    ASSERT_EQ(pk.size(), 1u);
    EXPECT_NEAR(pk[0].location, 0.0, 1e-15);
    EXPECT_NEAR(pk[0].height, delta_eps(0.0, 0.01), 1e-12);

    const auto xc = linspace(-4.0, 4.0, 2001);
    const Field c = kernel_classical(xc, {1.0}, 0.1, 0.01);
    const auto pc = peak_metrics(c, 0);
    ASSERT_EQ(pc.size(), 1u);
    EXPECT_NEAR(pc[0].location, std::sqrt(2.0 / 1.1), 0.004);
    EXPECT_THROW(peak_metrics(c, 3), ValidationError);
    EXPECT_THROW(peak_metrics(nonprop_solution(InitialData::dirac(), InitialData::zero(), {-1.0, 0.0, 1.0}, {1.0}, 0.01), 0),
                 ValidationError);
}

TEST(Peaks, ReferenceRunHasSecondaryPeak) {
    const auto xs = linspace(-2.0, 2.0, 801);
    const Field f = kernel_eps(xs, {1.0}, ref_params);
    const auto pk = peak_metrics(f, 0);
    ASSERT_GE(pk.size(), 2u);
    EXPECT_GT(pk[0].location, pk[1].location);
    for (std::size_t i = 1; i < pk.size(); ++i) EXPECT_GE(pk[i - 1].height, pk[i].height);
}
