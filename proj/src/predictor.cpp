#include "hdmd/predictor.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hdmd {

std::pair<Mat, Mat> split_shifted(const TrajectoryMatrix& H_hat) {
    if (H_hat.kind != EmbeddingKind::Hankel) {
        throw ShapeMismatch("split_shifted: input is not a Hankel embedding");
    }
    if (H_hat.cols() < 2) {
        throw TooFewColumns("split_shifted: need at least 2 columns, have " +
                            std::to_string(H_hat.cols()));
    }
    const Index c = H_hat.cols();
    return {H_hat.data.leftCols(c - 1), H_hat.data.rightCols(c - 1)};
}

PredictorModel fit_predictor(const TrajectoryMatrix& H_hat, double dt) {
    auto [past, future] = split_shifted(H_hat);

    Eigen::JacobiSVD<Mat> svd(past, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw DecompositionFailure("fit_predictor: SVD of the past matrix did not converge");
    }
    const Vec& s = svd.singularValues();
    const double cutoff = static_cast<double>(std::max(past.rows(), past.cols())) *
                          std::numeric_limits<double>::epsilon() * (s.size() > 0 ? s(0) : 0.0);
    Vec s_inv = Vec::Zero(s.size());
    for (Index i = 0; i < s.size(); ++i) {
        if (s(i) > cutoff) {
            s_inv(i) = 1.0 / s(i);
        }
    }
    // A = future * V * S^+ * U^T, composed smallest-first.
    Mat A = ((future * svd.matrixV()) * s_inv.asDiagonal()) * svd.matrixU().transpose();

    PredictorModel model;
    model.L = H_hat.L;
    model.n_x = H_hat.n_x;
    model.dt = dt;
    model.psi_star = H_hat.data.col(H_hat.cols() - 1);
    model.selector = Mat::Zero(H_hat.n_x, H_hat.rows());
    model.selector.rightCols(H_hat.n_x).setIdentity();
    model.A = std::move(A);

    Eigen::EigenSolver<Mat> eig(model.A, /*computeEigenvectors=*/false);
    if (eig.info() == Eigen::Success) {
        model.eigenvalues = eig.eigenvalues();
        model.eigs_ok = true;
    }
    return model;
}

Forecast rollout(const PredictorModel& model, Index horizon, double nu_hat_scale) {
    if (horizon < 1) {
        throw InvalidConfig("rollout: horizon must be >= 1");
    }
    Forecast fc;
    fc.horizon = horizon;
    fc.nu_hat_scale = nu_hat_scale;
    fc.values.reserve(horizon);
    Vec psi = model.psi_star;
    for (Index j = 0; j < horizon; ++j) {
        psi = model.A * psi;
        Vec x = psi.tail(model.n_x);
        if (!x.allFinite()) {
            fc.diverged = true;
        }
        fc.values.push_back(std::move(x));
    }
    return fc;
}

double spectral_radius(const PredictorModel& model) {
    if (!model.eigs_ok || model.eigenvalues.size() == 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return model.eigenvalues.cwiseAbs().maxCoeff();
}

} // namespace hdmd
