#include "hdmd/spectrum.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hdmd {

double lambda_star(double beta) {
    if (!(beta > 0.0) || beta > 1.0) {
        throw OutOfRange("lambda_star: beta=" + std::to_string(beta) + " outside (0, 1]");
    }
    return std::sqrt(2.0 * (beta + 1.0) +
                     8.0 * beta / ((beta + 1.0) + std::sqrt(beta * beta + 14.0 * beta + 1.0)));
}

namespace {

// Marchenko-Pastur density integrated under the substitution
// delta = d- + (d+ - d-) sin^2(u), which absorbs both sqrt endpoint
// singularities (including d- = 0 at beta = 1). The transformed integrand
//   g(u) = (d+ - d-) cos^2(u) / (pi beta) * num / (d- + num),
//   num  = (d+ - d-) sin^2(u),
// is smooth on [0, pi/2].
struct MpDensity {
    double beta, d_minus, d_plus, width;

    explicit MpDensity(double b)
        : beta(b),
          d_minus((1.0 - std::sqrt(b)) * (1.0 - std::sqrt(b))),
          d_plus((1.0 + std::sqrt(b)) * (1.0 + std::sqrt(b))),
          width(d_plus - d_minus) {}

    double g(double u) const {
        const double s = std::sin(u);
        const double num = width * s * s;
        const double c = std::cos(u);
        const double frac = (num == 0.0 && d_minus == 0.0) ? 1.0 : num / (d_minus + num);
        return width * c * c / (M_PI * beta) * frac;
    }

    double u_of_delta(double delta) const {
        const double x = std::clamp((delta - d_minus) / width, 0.0, 1.0);
        return std::asin(std::sqrt(x));
    }
};

double adaptive_simpson(const MpDensity& f, double a, double b, double fa, double fm, double fb,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f.g(lm);
    const double frm = f.g(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw ConvergenceFailure("mp_median: adaptive Simpson recursion depth exhausted");
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double mp_cdf(const MpDensity& f, double delta) {
    const double u1 = f.u_of_delta(delta);
    if (u1 <= 0.0) {
        return 0.0;
    }
    const double fa = f.g(0.0);
    const double fb = f.g(u1);
    const double fm = f.g(0.5 * u1);
    return adaptive_simpson(f, 0.0, u1, fa, fm, fb, 1e-12, 48);
}

double mp_median_impl(double beta) {
    const MpDensity f(beta);
    double lo = f.d_minus;
    double hi = f.d_plus;
    // Bisection on the CDF down to a 1e-10 interval.
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mp_cdf(f, mid) < 0.5) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (hi - lo > 1e-10) {
        throw ConvergenceFailure("mp_median: bisection did not reach interval tolerance");
    }
    return 0.5 * (lo + hi);
}

} // namespace

double mp_median(double beta) {
    if (!(beta > 0.0) || beta > 1.0) {
        throw OutOfRange("mp_median: beta=" + std::to_string(beta) + " outside (0, 1]");
    }
    static std::mutex cache_mutex;
    static std::map<double, double> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(beta);
        if (it != cache.end()) {
            return it->second;
        }
    }
    const double value = mp_median_impl(beta);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(beta, value);
    return value;
}

namespace {

Index numerical_rank_of_values(const Vec& s, Index rows, Index cols) {
    if (s.size() == 0 || s(0) <= 0.0) {
        return 0;
    }
    const double tol = static_cast<double>(std::max(rows, cols)) *
                       std::numeric_limits<double>::epsilon() * s(0);
    Index r = 0;
    while (r < s.size() && s(r) > tol) {
        ++r;
    }
    return r;
}

} // namespace

Index numerical_rank(const Mat& M) {
    Eigen::JacobiSVD<Mat> svd(M);
    return numerical_rank_of_values(svd.singularValues(), M.rows(), M.cols());
}

RankEstimate svht_rank(const TrajectoryMatrix& P) {
    if (P.kind != EmbeddingKind::Page) {
        throw ShapeMismatch("svht_rank: input is not a Page embedding");
    }
    const Index rows = P.rows();
    const Index cols = P.cols();
    if (rows > cols) {
        throw AspectRatioInvalid("svht_rank: " + std::to_string(rows) + " rows exceed " +
                                 std::to_string(cols) + " columns (beta > 1)");
    }

    Eigen::JacobiSVD<Mat> svd(P.data);
    if (svd.info() != Eigen::Success) {
        throw SvdFailure("svht_rank: SVD did not converge");
    }
    const Vec s = svd.singularValues();

    RankEstimate est;
    est.singular_values = s;
    est.beta = static_cast<double>(rows) / static_cast<double>(cols);
    est.lambda_star = lambda_star(est.beta);
    est.mp_median = mp_median(est.beta);

    const Index k = s.size();
    const double s_med = s((k - 1) / 2); // lower median: index ceil(k/2), 1-based, descending
    est.tau_star = est.lambda_star / std::sqrt(est.mp_median) * s_med;

    // Numerically zero singular values never count toward the rank, so the
    // noise-free case reports the rank of the actual nonzero spectrum.
    const double zero_floor = static_cast<double>(std::max(rows, cols)) *
                              std::numeric_limits<double>::epsilon() * (k > 0 ? s(0) : 0.0);
    const double cut = std::max(est.tau_star, zero_floor);
    Index r = 0;
    while (r < k && s(r) >= cut && s(r) > 0.0) {
        ++r;
    }
    est.r_hat = std::max<Index>(r, 1);

    est.sigma2_hat = s_med * s_med / (est.mp_median * static_cast<double>(cols));
    est.nu_hat_scale = est.sigma2_hat;
    return est;
}

bool rank_equivalence_check(const Mat& A, const Mat& C, const Vec& z0, Index L, Index d) {
    const Index n_z = A.rows();
    if (A.cols() != n_z || C.cols() != n_z || z0.size() != n_z) {
        throw DimensionMismatch("rank_equivalence_check: inconsistent system dimensions");
    }
    if (L < n_z || d < L) {
        throw OutOfRange("rank_equivalence_check: need d >= L >= n_z");
    }
    const Index n_x = C.rows();
    const Index N = d * L;

    // Krylov condition on B = A^L.
    Mat B = Mat::Identity(n_z, n_z);
    for (Index i = 0; i < L; ++i) {
        B = A * B;
    }
    Mat krylov(n_z, d);
    Vec v = z0;
    for (Index j = 0; j < d; ++j) {
        krylov.col(j) = v;
        v = B * v;
    }
    if (numerical_rank(krylov) < n_z) {
        throw KrylovDeficient("rank_equivalence_check: Krylov span of B = A^L is rank " +
                              std::to_string(numerical_rank(krylov)) + " < " +
                              std::to_string(n_z));
    }

    MeasurementBuffer buf(N, n_x, 1.0);
    Vec z = z0;
    for (Index k = 0; k < N; ++k) {
        buf.push(C * z);
        z = A * z;
    }
    const TrajectoryMatrix P = build_page(buf, L);
    const TrajectoryMatrix H = build_hankel(buf, L);
    return numerical_rank(P.data) == numerical_rank(H.data);
}

} // namespace hdmd
