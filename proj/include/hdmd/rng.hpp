#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hdmd {

/// Seedable random generator with explicit transforms, so that a given seed
/// yields the same stream on every run. Value type: copies advance
/// independently, which makes parallel scenario sweeps deterministic
/// per-scenario.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in (0, 1).
    double uniform() {
        // 53 mantissa bits; +0.5 ulp offset keeps the value strictly inside (0,1).
        const std::uint64_t bits = engine_() >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double stddev) { return stddev * normal(); }

    /// Laplace(0, scale) by inverse CDF.
    double laplace(double scale) {
        const double u = uniform() - 0.5;
        return -scale * std::copysign(std::log1p(-2.0 * std::abs(u)), u);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace hdmd
