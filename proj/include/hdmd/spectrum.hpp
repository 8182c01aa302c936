#pragma once

#include "hdmd/embedding.hpp"
#include "hdmd/types.hpp"

namespace hdmd {

/// Output of the singular-value hard threshold on a Page embedding.
struct RankEstimate {
    Vec singular_values;  // descending, length L * n_x
    double beta = 0.0;       // aspect ratio rows / cols, in (0, 1]
    double lambda_star = 0.0;
    double mp_median = 0.0;
    double tau_star = 0.0;   // data-driven threshold
    Index r_hat = 0;         // effective rank, >= 1
    double sigma2_hat = 0.0; // noise variance estimate
    double nu_hat_scale = 0.0; // scale of the isotropic delay-state covariance
};

/// AMSE-optimal hard-threshold coefficient as a function of the aspect
/// ratio: sqrt(2(b+1) + 8b / ((b+1) + sqrt(b^2 + 14b + 1))).
double lambda_star(double beta);

/// Median of the Marchenko-Pastur density with aspect ratio beta on its
/// support [(1-sqrt(beta))^2, (1+sqrt(beta))^2]. Computed by adaptive
/// Simpson quadrature (sqrt-substituted integrand, so the endpoint
/// singularities vanish) plus bisection on the CDF; memoized per beta
/// behind a lock.
double mp_median(double beta);

/// SVHT on a Page embedding with rows <= cols: threshold
/// tau* = lambda*(beta) / sqrt(mp_median(beta)) * median(singular values),
/// effective rank = #{sigma_i >= tau*} (never below 1, numerically zero
/// singular values never counted), and the conservative noise variance
/// sigma2 = median^2 / (mp_median * cols).
RankEstimate svht_rank(const TrajectoryMatrix& P);

/// Test oracle for the Page/Hankel rank equality on noise-free linear
/// output data x_k = C A^k z0, k = 0 .. d*L-1. Requires the Krylov span
/// condition on B = A^L (checked numerically; throws KrylovDeficient).
/// Returns whether the two embeddings have equal numerical rank.
bool rank_equivalence_check(const Mat& A, const Mat& C, const Vec& z0, Index L, Index d);

/// Rank-revealing cutoff used across the library:
/// sigma_i > max(rows, cols) * eps * sigma_max.
Index numerical_rank(const Mat& M);

} // namespace hdmd
