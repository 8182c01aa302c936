#pragma once

#include <utility>
#include <vector>

#include "hdmd/embedding.hpp"
#include "hdmd/types.hpp"

namespace hdmd {

/// Local one-step linear predictor in delay coordinates, fitted per window.
/// Immutable after fit; safe to share across threads.
struct PredictorModel {
    Mat A;             // (L n_x) x (L n_x) one-step operator
    Vec psi_star;      // current lifted state, last column of the denoised Hankel
    Mat selector;      // n_x x (L n_x), [0 | I]: picks the newest block
    CVec eigenvalues;  // of A; empty when the eigensolve failed
    bool eigs_ok = false;
    double dt = 0.0;
    Index L = 0;
    Index n_x = 0;
};

struct Forecast {
    std::vector<Vec> values; // x_{t+1} .. x_{t+horizon}
    Index horizon = 0;
    double nu_hat_scale = 0.0; // noise variance estimate of the same window
    bool diverged = false;     // any non-finite forecast entry
};

/// First and last cols-1 columns of a Hankel embedding; the second operand
/// is the first shifted one step forward in delay coordinates.
std::pair<Mat, Mat> split_shifted(const TrajectoryMatrix& H_hat);

/// Least Frobenius-norm one-step operator A = future * pinv(past), with the
/// minimum-norm pseudoinverse (singular values below
/// max(rows, cols) * eps * sigma_max treated as zero). A failed
/// eigendecomposition leaves the model usable; eigenvalues are diagnostics.
PredictorModel fit_predictor(const TrajectoryMatrix& H_hat, double dt = 0.0);

/// Iterate psi <- A psi from psi_star and emit the newest block each step.
/// Repeated mat-vec, no matrix powers. Non-finite output sets the diverged
/// flag instead of throwing.
Forecast rollout(const PredictorModel& model, Index horizon, double nu_hat_scale = 0.0);

/// max |eigenvalue|; NaN when the eigendecomposition was unavailable.
double spectral_radius(const PredictorModel& model);

} // namespace hdmd
