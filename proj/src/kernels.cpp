#include "hdmd/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hdmd {

namespace {
std::atomic<ExecMode> g_exec_mode{ExecMode::Parallel};
} // namespace

ExecMode exec_mode() { return g_exec_mode.load(std::memory_order_relaxed); }
void set_exec_mode(ExecMode mode) { g_exec_mode.store(mode, std::memory_order_relaxed); }

namespace kernels {

namespace {

// Mean of the block anti-diagonal with offset d, written into every member
// position. Blocks (l, m) satisfy l + m == d; scalar rows within a block
// stay separate.
inline void average_one_antidiag(const Mat& M, Index L, Index n_x, Index d, Mat& out) {
    const Index cols = M.cols();
    const Index l_lo = std::max<Index>(0, d - cols + 1);
    const Index l_hi = std::min<Index>(L - 1, d);
    const Index count = l_hi - l_lo + 1;
    for (Index p = 0; p < n_x; ++p) {
        const double first = M(l_lo * n_x + p, d - l_lo);
        double sum = 0.0;
        bool constant = true;
        for (Index l = l_lo; l <= l_hi; ++l) {
            const double v = M(l * n_x + p, d - l);
            sum += v;
            constant = constant && (v == first);
        }
        const double mean = constant ? first : sum / static_cast<double>(count);
        for (Index l = l_lo; l <= l_hi; ++l) {
            out(l * n_x + p, d - l) = mean;
        }
    }
}

inline void reconstruct_one_col(const Mat& U, const Vec& s, const Mat& V, Index r, Index j,
                                Mat& out) {
    Vec coeff = V.row(j).head(r).transpose().cwiseProduct(s.head(r));
    out.col(j).noalias() = U.leftCols(r) * coeff;
}

inline void hankel_fill_one_col(const Mat& w, Index L, Index j, Mat& out) {
    const Index n_x = w.rows();
    for (Index l = 0; l < L; ++l) {
        out.block(l * n_x, j, n_x, 1) = w.col(j + l);
    }
}

} // namespace

namespace serial {

void antidiag_average(const Mat& M, Index L, Index n_x, Mat& out) {
    const Index n_diag = L + M.cols() - 1;
    for (Index d = 0; d < n_diag; ++d) {
        average_one_antidiag(M, L, n_x, d, out);
    }
}

void truncated_reconstruct(const Mat& U, const Vec& s, const Mat& V, Index r, Mat& out) {
    for (Index j = 0; j < V.rows(); ++j) {
        reconstruct_one_col(U, s, V, r, j, out);
    }
}

void hankel_fill(const Mat& w, Index L, Mat& out) {
    for (Index j = 0; j < out.cols(); ++j) {
        hankel_fill_one_col(w, L, j, out);
    }
}

} // namespace serial

namespace par {

void antidiag_average(const Mat& M, Index L, Index n_x, Mat& out) {
    const Index n_diag = L + M.cols() - 1;
#pragma omp parallel for schedule(static)
    for (Index d = 0; d < n_diag; ++d) {
        average_one_antidiag(M, L, n_x, d, out);
    }
}

void truncated_reconstruct(const Mat& U, const Vec& s, const Mat& V, Index r, Mat& out) {
    const Index cols = V.rows();
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < cols; ++j) {
        reconstruct_one_col(U, s, V, r, j, out);
    }
}

void hankel_fill(const Mat& w, Index L, Mat& out) {
    const Index cols = out.cols();
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < cols; ++j) {
        hankel_fill_one_col(w, L, j, out);
    }
}

} // namespace par

namespace {

constexpr Index kParallelThreshold = 1 << 15;

inline bool go_parallel(Index work) {
#ifdef _OPENMP
    return exec_mode() == ExecMode::Parallel && work >= kParallelThreshold &&
           omp_get_max_threads() > 1;
#else
    (void)work;
    return false;
#endif
}

} // namespace

void antidiag_average(const Mat& M, Index L, Index n_x, Mat& out) {
    if (go_parallel(M.size())) {
        par::antidiag_average(M, L, n_x, out);
    } else {
        serial::antidiag_average(M, L, n_x, out);
    }
}

void truncated_reconstruct(const Mat& U, const Vec& s, const Mat& V, Index r, Mat& out) {
    if (go_parallel(U.rows() * V.rows() * std::max<Index>(r, 1))) {
        par::truncated_reconstruct(U, s, V, r, out);
    } else {
        serial::truncated_reconstruct(U, s, V, r, out);
    }
}

void hankel_fill(const Mat& w, Index L, Mat& out) {
    if (go_parallel(out.size())) {
        par::hankel_fill(w, L, out);
    } else {
        serial::hankel_fill(w, L, out);
    }
}

} // namespace kernels
} // namespace hdmd
