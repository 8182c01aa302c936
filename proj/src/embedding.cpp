#include "hdmd/embedding.hpp"

#include <cmath>
#include <string>

#include "hdmd/kernels.hpp"

namespace hdmd {

MeasurementBuffer::MeasurementBuffer(Index capacity, Index dim, double dt) : dt_(dt) {
    if (capacity < 1 || dim < 1) {
        throw InvalidConfig("MeasurementBuffer: capacity and dim must be positive");
    }
    if (!(dt > 0.0)) {
        throw InvalidConfig("MeasurementBuffer: dt must be positive");
    }
    data_.setZero(dim, capacity);
}

void MeasurementBuffer::push(const Vec& sample) {
    if (sample.size() != data_.rows()) {
        throw DimensionMismatch("MeasurementBuffer::push: sample has dimension " +
                                std::to_string(sample.size()) + ", expected " +
                                std::to_string(data_.rows()));
    }
    const Index cap = data_.cols();
    if (count_ < cap) {
        data_.col((head_ + count_) % cap) = sample;
        ++count_;
    } else {
        data_.col(head_) = sample;
        head_ = (head_ + 1) % cap;
    }
}

Vec MeasurementBuffer::at(Index i) const {
    return data_.col((head_ + i) % data_.cols());
}

Mat MeasurementBuffer::window() const {
    const Index cap = data_.cols();
    Mat w(data_.rows(), count_);
    const Index tail = std::min(count_, cap - head_);
    w.leftCols(tail) = data_.middleCols(head_, tail);
    if (tail < count_) {
        w.rightCols(count_ - tail) = data_.leftCols(count_ - tail);
    }
    return w;
}

TrajectoryMatrix build_hankel(const MeasurementBuffer& buf, Index L) {
    if (!buf.full()) {
        throw BufferNotFull("build_hankel: buffer holds " + std::to_string(buf.size()) +
                            " of " + std::to_string(buf.capacity()) + " samples");
    }
    const Index N = buf.capacity();
    if (L < 1 || L > N) {
        throw WindowTooLong("build_hankel: L=" + std::to_string(L) +
                            " outside [1, " + std::to_string(N) + "]");
    }
    TrajectoryMatrix H;
    H.kind = EmbeddingKind::Hankel;
    H.L = L;
    H.n_x = buf.dim();
    H.data.resize(L * buf.dim(), N - L + 1);
    const Mat w = buf.window();
    kernels::hankel_fill(w, L, H.data);
    return H;
}

TrajectoryMatrix build_page(const MeasurementBuffer& buf, Index L) {
    if (!buf.full()) {
        throw BufferNotFull("build_page: buffer holds " + std::to_string(buf.size()) +
                            " of " + std::to_string(buf.capacity()) + " samples");
    }
    const Index N = buf.capacity();
    if (L < 1 || L > N) {
        throw WindowTooLong("build_page: L=" + std::to_string(L) +
                            " outside [1, " + std::to_string(N) + "]");
    }
    if (N % L != 0) {
        throw NotDivisible("build_page: N=" + std::to_string(N) +
                           " is not divisible by L=" + std::to_string(L));
    }
    const Index n_x = buf.dim();
    const Index m = N / L;
    TrajectoryMatrix P;
    P.kind = EmbeddingKind::Page;
    P.L = L;
    P.n_x = n_x;
    P.data.resize(L * n_x, m);
    const Mat w = buf.window();
    // Column j is samples jL .. jL+L-1 stacked; same layout as the window
    // memory, so a reshape-style copy suffices.
    for (Index j = 0; j < m; ++j) {
        for (Index l = 0; l < L; ++l) {
            P.data.block(l * n_x, j, n_x, 1) = w.col(j * L + l);
        }
    }
    return P;
}

TrajectoryMatrix project_hankel(const Mat& M, Index L, Index n_x) {
    if (L < 1 || n_x < 1 || M.rows() != L * n_x || M.cols() < 1) {
        throw ShapeMismatch("project_hankel: matrix is " + std::to_string(M.rows()) + "x" +
                            std::to_string(M.cols()) + ", expected " +
                            std::to_string(L * n_x) + " rows and at least one column");
    }
    TrajectoryMatrix H;
    H.kind = EmbeddingKind::Hankel;
    H.L = L;
    H.n_x = n_x;
    H.data.resize(M.rows(), M.cols());
    kernels::antidiag_average(M, L, n_x, H.data);
    return H;
}

std::vector<Vec> extract_signal(const TrajectoryMatrix& H) {
    if (H.kind != EmbeddingKind::Hankel) {
        throw ShapeMismatch("extract_signal: input is not a Hankel embedding");
    }
    const Index L = H.L;
    const Index n_x = H.n_x;
    const Index cols = H.cols();
    const Mat& M = H.data;

    // Anti-diagonal block constancy check, at block granularity.
    const double tol = 1e-9 * M.cwiseAbs().maxCoeff();
    double worst = 0.0;
    for (Index d = 0; d < L + cols - 1; ++d) {
        const Index l_lo = std::max<Index>(0, d - cols + 1);
        const Index l_hi = std::min<Index>(L - 1, d);
        for (Index p = 0; p < n_x; ++p) {
            const double ref = M(l_lo * n_x + p, d - l_lo);
            for (Index l = l_lo + 1; l <= l_hi; ++l) {
                worst = std::max(worst, std::abs(M(l * n_x + p, d - l) - ref));
            }
        }
    }
    if (worst > tol) {
        throw NotConsistent("extract_signal: anti-diagonal deviation " + std::to_string(worst) +
                            " exceeds tolerance " + std::to_string(tol));
    }

    // First column top to bottom, then the last block of each further
    // column. Reads entries directly so a round trip is bit-exact.
    std::vector<Vec> out;
    out.reserve(L + cols - 1);
    for (Index l = 0; l < L; ++l) {
        out.emplace_back(M.block(l * n_x, 0, n_x, 1));
    }
    for (Index j = 1; j < cols; ++j) {
        out.emplace_back(M.block((L - 1) * n_x, j, n_x, 1));
    }
    return out;
}

} // namespace hdmd
