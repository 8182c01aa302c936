#pragma once

#include <vector>

#include "hdmd/types.hpp"

namespace hdmd {

/// Denoising quality relative to a known clean signal. SNR is the
/// signal-power over residual-power ratio in dB; reduction is the RMS
/// residual ratio. A bit-exact recovery is reported with infinite output
/// SNR and the zero_residual flag instead of an error.
struct DenoiseReport {
    double snr_in_db = 0.0;
    double snr_out_db = 0.0;
    double snr_gain_db = 0.0;
    double noise_reduction_pct = 0.0;
    double rmse = 0.0;
    bool zero_residual = false;       // denoised == clean exactly
    bool zero_input_residual = false; // noisy == clean exactly
};

/// Time spent at-or-above the error tolerance over a horizon.
struct ViolationReport {
    double epsilon = 0.0;
    double J_t = 0.0; // seconds
    double horizon_seconds = 0.0;
    double pct_violating = 0.0;
    Index violations = 0;
    Index steps = 0;
};

DenoiseReport denoise_report(const Vec& clean, const Vec& noisy, const Vec& denoised);
DenoiseReport denoise_report(const std::vector<double>& clean, const std::vector<double>& noisy,
                             const std::vector<double>& denoised);

ViolationReport violation_duration(const std::vector<Vec>& pred, const std::vector<Vec>& truth,
                                   double dt, double epsilon);
ViolationReport violation_duration(const std::vector<double>& pred,
                                   const std::vector<double>& truth, double dt, double epsilon);

/// Violation report from precomputed per-step error norms; used for the
/// run-aggregate metric where errors from every window are pooled.
ViolationReport violation_from_errors(const std::vector<double>& errors, double dt,
                                      double epsilon);

} // namespace hdmd
