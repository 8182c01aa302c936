#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hdmd/simgen.hpp"
#include "support.hpp"

using namespace hdmd;

TEST_CASE("unicycle velocity is periodic with the profile period") {
    UnicycleProfile p; // a=3, T=40, dt=0.02, duration=160
    const auto u = unicycle_velocity(p);
    REQUIRE(u.size() == 8000);
    const std::size_t per = 2000; // samples per period
    for (std::size_t k = 0; k < 3 * per; k += 37) {
        CHECK(std::abs(u[k] - u[k + per]) < 1e-10);
    }
}

TEST_CASE("unicycle velocity peak matches dense maximization of the closed form") {
    UnicycleProfile p;
    const auto u = unicycle_velocity(p);
    double sampled_max = 0.0;
    for (std::size_t k = 0; k < 2000; ++k) {
        sampled_max = std::max(sampled_max, u[k]);
    }
    // Oracle: much denser sweep of a w sqrt(cos^2(wt) + cos^2(2wt)) over one period.
    const double w = 2.0 * M_PI / p.period;
    double dense_max = 0.0;
    const int steps = 2000000;
    for (int i = 0; i < steps; ++i) {
        const double t = p.period * static_cast<double>(i) / steps;
        const double cx = std::cos(w * t);
        const double cy = std::cos(2.0 * w * t);
        dense_max = std::max(dense_max, p.amplitude * w * std::sqrt(cx * cx + cy * cy));
    }
    CHECK(sampled_max == doctest::Approx(dense_max).epsilon(1e-6));
    // The dense maximum itself sits at a w sqrt(2).
    CHECK(dense_max == doctest::Approx(p.amplitude * w * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("unicycle velocity scales linearly in the amplitude") {
    UnicycleProfile p;
    p.duration = 10.0;
    UnicycleProfile p2 = p;
    p2.amplitude = 2.0 * p.amplitude;
    const auto u1 = unicycle_velocity(p);
    const auto u2 = unicycle_velocity(p2);
    for (std::size_t k = 0; k < u1.size(); ++k) {
        CHECK(u2[k] == 2.0 * u1[k]);
    }
}

TEST_CASE("unicycle velocity is strictly positive and finite") {
    UnicycleProfile p;
    p.duration = 40.0;
    for (double v : unicycle_velocity(p)) {
        CHECK(v > 0.0);
        CHECK(std::isfinite(v));
    }
}

TEST_CASE("unicycle profile validation") {
    UnicycleProfile p;
    p.duration = 0.0;
    CHECK_THROWS_AS(unicycle_velocity(p), InvalidProfile);
    p = UnicycleProfile{};
    p.dt = 50.0; // >= period
    CHECK_THROWS_AS(unicycle_velocity(p), InvalidProfile);
    p = UnicycleProfile{};
    p.amplitude = -1.0;
    CHECK_THROWS_AS(unicycle_velocity(p), InvalidProfile);
}

TEST_CASE("add_noise vanishes in the small-sigma limit") {
    std::vector<double> clean(200, 1.25);
    NoiseModel nm;
    nm.sigma_x = 1e-12;
    nm.seed = 4;
    const auto noisy = add_noise(clean, nm);
    for (std::size_t k = 0; k < clean.size(); ++k) {
        CHECK(std::abs(noisy[k] - clean[k]) < 1e-10);
    }
}

TEST_CASE("gaussian noise has the requested variance") {
    std::vector<double> clean(1000000, 0.0);
    NoiseModel nm;
    nm.kind = NoiseKind::Gaussian;
    nm.sigma_x = 0.25;
    nm.seed = 7;
    const auto eta = add_noise(clean, nm);
    double acc = 0.0, acc2 = 0.0;
    for (double v : eta) {
        acc += v;
        acc2 += v * v;
    }
    const double n = static_cast<double>(eta.size());
    const double var = acc2 / n - (acc / n) * (acc / n);
    CHECK(var == doctest::Approx(0.0625).epsilon(0.02));
}

TEST_CASE("ar1 laplace noise matches stationary variance and autocorrelation") {
    std::vector<double> clean(1000000, 0.0);
    NoiseModel nm;
    nm.kind = NoiseKind::AR1Laplace;
    nm.sigma_x = 0.25;
    nm.rho = 0.8;
    nm.seed = 8;
    const auto eta = add_noise(clean, nm);
    double acc = 0.0, acc2 = 0.0, cross = 0.0;
    for (std::size_t k = 0; k < eta.size(); ++k) {
        acc += eta[k];
        acc2 += eta[k] * eta[k];
        if (k > 0) {
            cross += eta[k] * eta[k - 1];
        }
    }
    const double n = static_cast<double>(eta.size());
    const double mean = acc / n;
    const double var = acc2 / n - mean * mean;
    const double lag1 = (cross / (n - 1.0) - mean * mean) / var;
    CHECK(var == doctest::Approx(0.0625).epsilon(0.03));
    CHECK(std::abs(lag1 - 0.8) < 0.02);
}

TEST_CASE("noise is deterministic per seed") {
    std::vector<double> clean(512, 0.5);
    NoiseModel nm;
    nm.kind = NoiseKind::AR1Laplace;
    nm.sigma_x = 0.3;
    nm.seed = 1234;
    const auto a = add_noise(clean, nm);
    const auto b = add_noise(clean, nm);
    CHECK(a == b);
    nm.seed = 1235;
    const auto c = add_noise(clean, nm);
    CHECK(a != c);
}

TEST_CASE("noise model validation") {
    NoiseModel nm;
    nm.sigma_x = 0.0;
    CHECK_THROWS_AS(nm.validate(), InvalidConfig);
    nm = NoiseModel{};
    nm.kind = NoiseKind::AR1Laplace;
    nm.rho = 1.0;
    CHECK_THROWS_AS(nm.validate(), InvalidConfig);
    nm.rho = 0.5;
    CHECK(nm.laplace_scale() ==
          doctest::Approx(std::sqrt((1.0 - 0.25) * nm.sigma_x * nm.sigma_x / 2.0)));
}

TEST_CASE("lti_stream of the identity is constant") {
    const Mat A = Mat::Identity(2, 2);
    Mat C(1, 2);
    C << 1.0, -2.0;
    Vec z0(2);
    z0 << 3.0, 1.0;
    const auto xs = lti_stream(A, C, z0, 5);
    REQUIRE(xs.size() == 5);
    for (const auto& x : xs) {
        CHECK(x(0) == 1.0);
    }
}

TEST_CASE("lti_stream scalar decay") {
    Mat A(1, 1), C(1, 1);
    A << 0.9;
    C << 1.0;
    Vec z0(1);
    z0 << 1.0;
    const auto xs = lti_stream(A, C, z0, 4);
    CHECK(xs[0](0) == doctest::Approx(1.0));
    CHECK(xs[1](0) == doctest::Approx(0.9));
    CHECK(xs[2](0) == doctest::Approx(0.81));
    CHECK(xs[3](0) == doctest::Approx(0.729));
}

TEST_CASE("lti_stream rotation produces a sampled cosine") {
    const double theta = 0.1;
    Mat A(2, 2);
    A << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    Mat C(1, 2);
    C << 1.0, 0.0;
    Vec z0(2);
    z0 << 1.0, 0.0;
    const auto xs = lti_stream(A, C, z0, 100);
    for (int k = 0; k < 100; ++k) {
        CHECK(xs[static_cast<std::size_t>(k)](0) ==
              doctest::Approx(std::cos(theta * k)).epsilon(1e-10));
    }
}

TEST_CASE("lti_stream validates dimensions") {
    const Mat A = Mat::Identity(2, 2);
    const Mat C = Mat::Ones(1, 3);
    Vec z0(2);
    z0 << 1.0, 0.0;
    CHECK_THROWS_AS(lti_stream(A, C, z0, 3), DimensionMismatch);
}
