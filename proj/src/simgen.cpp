#include "hdmd/simgen.hpp"

#include <cmath>
#include <string>

#include "hdmd/errors.hpp"
#include "hdmd/rng.hpp"

namespace hdmd {

void UnicycleProfile::validate() const {
    if (!(amplitude > 0.0) || !(period > 0.0) || !(dt > 0.0) || dt >= period ||
        !(duration > 0.0)) {
        throw InvalidProfile("unicycle profile requires a > 0, T > 0, 0 < dt < T, duration > 0");
    }
}

void NoiseModel::validate() const {
    if (!(sigma_x > 0.0)) {
        throw InvalidConfig("noise model requires sigma_x > 0");
    }
    if (kind == NoiseKind::AR1Laplace && !(std::abs(rho) < 1.0)) {
        throw InvalidConfig("AR(1) noise requires |rho| < 1");
    }
}

double NoiseModel::laplace_scale() const {
    return std::sqrt((1.0 - rho * rho) * sigma_x * sigma_x / 2.0);
}

std::vector<double> unicycle_velocity(const UnicycleProfile& profile) {
    profile.validate();
    const double w = 2.0 * M_PI / profile.period;
    const auto count = static_cast<Index>(std::llround(profile.duration / profile.dt));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Index k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) * profile.dt;
        const double cx = std::cos(w * t);          // xdot / (a w)
        const double cy = std::cos(2.0 * w * t);    // ydot / (a w)
        out.push_back(profile.amplitude * w * std::sqrt(cx * cx + cy * cy));
    }
    return out;
}

std::vector<double> add_noise(const std::vector<double>& clean, const NoiseModel& model) {
    model.validate();
    Rng rng(model.seed);
    std::vector<double> out(clean.size());
    if (model.kind == NoiseKind::Gaussian) {
        for (std::size_t k = 0; k < clean.size(); ++k) {
            out[k] = clean[k] + rng.normal(model.sigma_x);
        }
        return out;
    }
    // AR(1)-Laplace, initialized at the stationary variance to avoid
    // burn-in transients.
    const double b = model.laplace_scale();
    double eta = rng.laplace(model.sigma_x / std::sqrt(2.0));
    for (std::size_t k = 0; k < clean.size(); ++k) {
        if (k > 0) {
            eta = model.rho * eta + rng.laplace(b);
        }
        out[k] = clean[k] + eta;
    }
    return out;
}

std::vector<Vec> lti_stream(const Mat& A, const Mat& C, const Vec& z0, Index steps) {
    if (A.rows() != A.cols() || C.cols() != A.rows() || z0.size() != A.rows()) {
        throw DimensionMismatch("lti_stream: inconsistent dimensions (A " +
                                std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                                ", C " + std::to_string(C.rows()) + "x" +
                                std::to_string(C.cols()) + ", z0 " + std::to_string(z0.size()) +
                                ")");
    }
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(std::max<Index>(steps, 0)));
    Vec z = z0;
    for (Index k = 0; k < steps; ++k) {
        out.emplace_back(C * z);
        z = A * z;
    }
    return out;
}

} // namespace hdmd
