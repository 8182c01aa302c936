#pragma once

#include <cstdint>
#include <vector>

#include "hdmd/types.hpp"

namespace hdmd {

/// Figure-eight reference trajectory: x = a sin(wt), y = (a/2) sin(2wt)
/// with w = 2 pi / T, sampled every dt over the duration.
struct UnicycleProfile {
    double amplitude = 3.0; // meters
    double period = 40.0;   // seconds
    double dt = 0.02;       // seconds
    double duration = 160.0; // seconds

    void validate() const;
};

enum class NoiseKind { Gaussian, AR1Laplace };

struct NoiseModel {
    NoiseKind kind = NoiseKind::Gaussian;
    double sigma_x = 0.25; // target stationary standard deviation
    double rho = 0.8;      // AR(1) coefficient, |rho| < 1 (AR1Laplace only)
    std::uint64_t seed = 0;

    void validate() const;
    /// Laplace innovation scale giving stationary variance sigma_x^2.
    double laplace_scale() const;
};

/// Forward speed profile u(t) = sqrt(xdot^2 + ydot^2) of the figure-eight;
/// smooth, strictly positive, periodic with the profile period.
std::vector<double> unicycle_velocity(const UnicycleProfile& profile);

/// clean + noise. Gaussian: i.i.d. N(0, sigma_x^2). AR1Laplace: eta_t =
/// rho eta_{t-1} + Laplace(0, b) with eta_0 drawn at the stationary
/// variance. Deterministic per seed.
std::vector<double> add_noise(const std::vector<double>& clean, const NoiseModel& model);

/// Noise-free linear output stream x_k = C A^k z0, k = 0 .. steps-1.
std::vector<Vec> lti_stream(const Mat& A, const Mat& C, const Vec& z0, Index steps);

} // namespace hdmd
