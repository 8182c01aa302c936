#pragma once

// Shared helpers for the test suites. The quadrature and candidate
// generators here are deliberately independent of the library's own
// numerical paths so they can serve as oracles.

#include <algorithm>
#include <cmath>
#include <vector>

#include "hdmd/embedding.hpp"
#include "hdmd/rng.hpp"
#include "hdmd/types.hpp"

namespace testsupport {

// Marchenko-Pastur CDF by fixed-grid composite Simpson on the
// sqrt-substituted integrand (delta = d- + (d+ - d-) sin^2 u). No shared
// code with hdmd::mp_median, which uses adaptive quadrature plus bisection.
inline double mp_cdf_oracle(double beta, double delta, int panels = 20000) {
    const double sb = std::sqrt(beta);
    const double d_minus = (1.0 - sb) * (1.0 - sb);
    const double d_plus = (1.0 + sb) * (1.0 + sb);
    const double width = d_plus - d_minus;
    const double x = std::clamp((delta - d_minus) / width, 0.0, 1.0);
    const double u1 = std::asin(std::sqrt(x));
    auto g = [&](double u) {
        const double s = std::sin(u);
        const double num = width * s * s;
        const double c = std::cos(u);
        if (num == 0.0 && d_minus == 0.0) {
            return width * c * c / (M_PI * beta);
        }
        return width * c * c / (M_PI * beta) * (num / (d_minus + num));
    };
    const double h = u1 / (2.0 * panels);
    double acc = g(0.0) + g(u1);
    for (int i = 1; i < 2 * panels; ++i) {
        acc += g(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

// Random Hankel-structured matrix (n_x = 1), as a brute-force candidate for
// projection optimality checks.
inline hdmd::Mat random_hankel(hdmd::Rng& rng, hdmd::Index L, hdmd::Index cols, double scale) {
    const hdmd::Index n = L + cols - 1;
    std::vector<double> sig(static_cast<std::size_t>(n));
    for (auto& v : sig) {
        v = scale * rng.normal();
    }
    hdmd::Mat Z(L, cols);
    for (hdmd::Index j = 0; j < cols; ++j) {
        for (hdmd::Index l = 0; l < L; ++l) {
            Z(l, j) = sig[static_cast<std::size_t>(j + l)];
        }
    }
    return Z;
}

inline hdmd::Mat random_matrix(hdmd::Rng& rng, hdmd::Index rows, hdmd::Index cols) {
    hdmd::Mat M(rows, cols);
    for (hdmd::Index j = 0; j < cols; ++j) {
        for (hdmd::Index i = 0; i < rows; ++i) {
            M(i, j) = rng.normal();
        }
    }
    return M;
}

inline hdmd::Vec random_vector(hdmd::Rng& rng, hdmd::Index n) {
    hdmd::Vec v(n);
    for (hdmd::Index i = 0; i < n; ++i) {
        v(i) = rng.normal();
    }
    return v;
}

// Random system matrix rescaled to a target spectral radius; keeps long
// noise-free trajectories numerically well-scaled.
inline hdmd::Mat random_system(hdmd::Rng& rng, hdmd::Index n, double spectral_radius) {
    hdmd::Mat A = random_matrix(rng, n, n);
    const double rho = A.eigenvalues().cwiseAbs().maxCoeff();
    if (rho > 0.0) {
        A *= spectral_radius / rho;
    }
    return A;
}

inline hdmd::MeasurementBuffer buffer_from(const std::vector<double>& samples, double dt = 1.0) {
    hdmd::MeasurementBuffer buf(static_cast<hdmd::Index>(samples.size()), 1, dt);
    for (double v : samples) {
        hdmd::Vec x(1);
        x(0) = v;
        buf.push(x);
    }
    return buf;
}

inline hdmd::MeasurementBuffer buffer_from(const std::vector<hdmd::Vec>& samples,
                                           double dt = 1.0) {
    hdmd::MeasurementBuffer buf(static_cast<hdmd::Index>(samples.size()),
                                samples.front().size(), dt);
    for (const auto& v : samples) {
        buf.push(v);
    }
    return buf;
}

template <typename A, typename B>
bool bitwise_equal(const A& a, const B& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           (a.array() == b.array()).all();
}

inline double percentile(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    const auto idx = static_cast<std::size_t>(p * (values.size() - 1) + 0.5);
    return values[std::min(idx, values.size() - 1)];
}

inline double median(std::vector<double> values) { return percentile(std::move(values), 0.5); }

} // namespace testsupport
