#pragma once

#include <vector>

#include "hdmd/embedding.hpp"
#include "hdmd/types.hpp"

namespace hdmd {

struct CadzowConfig {
    Index iterations = 3; // J >= 1; a few iterations suffice at fixed latency
    Index rank = 1;       // target rank r >= 1
    /// Optional early exit for offline use: stop once the Frobenius distance
    /// of the Hankel iterate to the rank-r set drops below
    /// stop_tol * ||H||_F. Zero keeps the fixed iteration count, which is
    /// what the real-time path uses.
    double stop_tol = 0.0;
};

/// Closest rank-<= r matrix in Frobenius norm (truncated SVD). Returns M
/// unchanged (up to SVD round-off) when r >= rank(M).
Mat truncate_rank(const Mat& M, Index r);

/// Alternating projections [hankel-project . rank-truncate]^J applied to a
/// Hankel embedding. The final projection is the Hankel one, so the output
/// has exact anti-diagonal block constancy.
TrajectoryMatrix cadzow_denoise(const TrajectoryMatrix& H, const CadzowConfig& cfg);

/// Same, recording the per-iteration residual ||rank_truncate(H_j) - H_j||_F
/// (non-increasing in j).
TrajectoryMatrix cadzow_denoise(const TrajectoryMatrix& H, const CadzowConfig& cfg,
                                std::vector<double>& residuals);

} // namespace hdmd
