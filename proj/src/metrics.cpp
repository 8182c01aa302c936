#include "hdmd/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hdmd/errors.hpp"

namespace hdmd {

namespace {

double to_db(double ratio) { return 10.0 * std::log10(ratio); }

} // namespace

DenoiseReport denoise_report(const Vec& clean, const Vec& noisy, const Vec& denoised) {
    if (clean.size() < 1 || clean.size() != noisy.size() || clean.size() != denoised.size()) {
        throw LengthMismatch("denoise_report: sequences must have equal nonzero length (" +
                             std::to_string(clean.size()) + ", " + std::to_string(noisy.size()) +
                             ", " + std::to_string(denoised.size()) + ")");
    }
    const double n = static_cast<double>(clean.size());
    const double signal_power = clean.squaredNorm();
    const double in_power = (noisy - clean).squaredNorm();
    const double out_power = (denoised - clean).squaredNorm();
    const double inf = std::numeric_limits<double>::infinity();

    DenoiseReport rep;
    rep.zero_input_residual = in_power == 0.0;
    rep.zero_residual = out_power == 0.0;
    rep.rmse = std::sqrt(out_power / n);
    rep.snr_in_db = rep.zero_input_residual ? inf : to_db(signal_power / in_power);
    rep.snr_out_db = rep.zero_residual ? inf : to_db(signal_power / out_power);
    rep.snr_gain_db = rep.snr_out_db - rep.snr_in_db;
    if (rep.zero_residual) {
        rep.noise_reduction_pct = 100.0;
        if (rep.zero_input_residual) {
            rep.snr_gain_db = 0.0; // both residuals vanish; nothing to reduce
            rep.noise_reduction_pct = 0.0;
        }
    } else {
        rep.noise_reduction_pct = 100.0 * (1.0 - std::sqrt(out_power / in_power));
    }
    return rep;
}

DenoiseReport denoise_report(const std::vector<double>& clean, const std::vector<double>& noisy,
                             const std::vector<double>& denoised) {
    auto wrap = [](const std::vector<double>& v) {
        return Eigen::Map<const Vec>(v.data(), static_cast<Index>(v.size()));
    };
    if (clean.empty() || clean.size() != noisy.size() || clean.size() != denoised.size()) {
        throw LengthMismatch("denoise_report: sequences must have equal nonzero length");
    }
    return denoise_report(Vec(wrap(clean)), Vec(wrap(noisy)), Vec(wrap(denoised)));
}

ViolationReport violation_from_errors(const std::vector<double>& errors, double dt,
                                      double epsilon) {
    if (!(dt > 0.0) || !(epsilon > 0.0)) {
        throw InvalidConfig("violation_duration: dt and epsilon must be positive");
    }
    ViolationReport rep;
    rep.epsilon = epsilon;
    rep.steps = static_cast<Index>(errors.size());
    for (double e : errors) {
        if (e >= epsilon) {
            ++rep.violations;
        }
    }
    rep.J_t = dt * static_cast<double>(rep.violations);
    rep.horizon_seconds = dt * static_cast<double>(rep.steps);
    rep.pct_violating =
        rep.steps > 0 ? 100.0 * static_cast<double>(rep.violations) / static_cast<double>(rep.steps)
                      : 0.0;
    return rep;
}

ViolationReport violation_duration(const std::vector<Vec>& pred, const std::vector<Vec>& truth,
                                   double dt, double epsilon) {
    if (pred.size() != truth.size()) {
        throw LengthMismatch("violation_duration: prediction and truth lengths differ (" +
                             std::to_string(pred.size()) + " vs " + std::to_string(truth.size()) +
                             ")");
    }
    std::vector<double> errors;
    errors.reserve(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (pred[i].size() != truth[i].size()) {
            throw LengthMismatch("violation_duration: dimension mismatch at step " +
                                 std::to_string(i));
        }
        errors.push_back((pred[i] - truth[i]).norm());
    }
    return violation_from_errors(errors, dt, epsilon);
}

ViolationReport violation_duration(const std::vector<double>& pred,
                                   const std::vector<double>& truth, double dt, double epsilon) {
    if (pred.size() != truth.size()) {
        throw LengthMismatch("violation_duration: prediction and truth lengths differ");
    }
    std::vector<double> errors;
    errors.reserve(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i) {
        errors.push_back(std::abs(pred[i] - truth[i]));
    }
    return violation_from_errors(errors, dt, epsilon);
}

} // namespace hdmd
