#include "hdmd/cadzow.hpp"

#include <string>

#include <Eigen/SVD>

#include "hdmd/kernels.hpp"

namespace hdmd {

Mat truncate_rank(const Mat& M, Index r) {
    if (r < 1) {
        throw InvalidConfig("truncate_rank: rank must be >= 1");
    }
    if (r >= std::min(M.rows(), M.cols())) {
        return M;
    }
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw SvdFailure("truncate_rank: SVD did not converge");
    }
    Mat out(M.rows(), M.cols());
    kernels::truncated_reconstruct(svd.matrixU(), svd.singularValues(), svd.matrixV(), r, out);
    return out;
}

namespace {

TrajectoryMatrix cadzow_impl(const TrajectoryMatrix& H, const CadzowConfig& cfg,
                             std::vector<double>* residuals) {
    if (H.kind != EmbeddingKind::Hankel) {
        throw ShapeMismatch("cadzow_denoise: input is not a Hankel embedding");
    }
    if (cfg.iterations < 1) {
        throw InvalidConfig("cadzow_denoise: iterations must be >= 1");
    }
    if (cfg.rank < 1 || cfg.rank > std::min(H.rows(), H.cols())) {
        throw InvalidConfig("cadzow_denoise: rank " + std::to_string(cfg.rank) +
                            " invalid for a " + std::to_string(H.rows()) + "x" +
                            std::to_string(H.cols()) + " matrix");
    }

    const double h_norm = H.data.norm();
    TrajectoryMatrix out = H;
    Mat truncated(H.rows(), H.cols());
    for (Index j = 0; j < cfg.iterations; ++j) {
        truncated = truncate_rank(out.data, cfg.rank);
        const double residual = (truncated - out.data).norm();
        if (residuals != nullptr) {
            residuals->push_back(residual);
        }
        kernels::antidiag_average(truncated, H.L, H.n_x, out.data);
        if (cfg.stop_tol > 0.0 && residual < cfg.stop_tol * h_norm) {
            break;
        }
    }
    return out;
}

} // namespace

TrajectoryMatrix cadzow_denoise(const TrajectoryMatrix& H, const CadzowConfig& cfg) {
    return cadzow_impl(H, cfg, nullptr);
}

TrajectoryMatrix cadzow_denoise(const TrajectoryMatrix& H, const CadzowConfig& cfg,
                                std::vector<double>& residuals) {
    residuals.clear();
    return cadzow_impl(H, cfg, &residuals);
}

} // namespace hdmd
