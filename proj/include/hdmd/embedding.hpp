#pragma once

#include <vector>

#include "hdmd/errors.hpp"
#include "hdmd/types.hpp"

namespace hdmd {

/// Fixed-capacity sliding window of the most recent measurement vectors.
/// Samples live in a circular store: push is O(1) and evicts the oldest
/// entry once full; window() linearizes to oldest-first order in O(N).
/// Single writer; concurrent reads during a push are not supported.
class MeasurementBuffer {
public:
    MeasurementBuffer(Index capacity, Index dim, double dt);

    void push(const Vec& sample);

    Index capacity() const { return data_.cols(); }
    Index dim() const { return data_.rows(); }
    Index size() const { return count_; }
    bool full() const { return count_ == data_.cols(); }
    double dt() const { return dt_; }

    /// Sample i in oldest-first order, 0 <= i < size().
    Vec at(Index i) const;

    /// All samples as columns, oldest first (n_x x size()).
    Mat window() const;

    void clear() { head_ = 0; count_ = 0; }

private:
    Mat data_; // n_x x capacity, circular columns
    Index head_ = 0; // index of the oldest sample
    Index count_ = 0;
    double dt_;
};

enum class EmbeddingKind { Hankel, Page };

/// Block Hankel or block Page embedding of a measurement window, with its
/// shape metadata. Blocks are n_x-dimensional measurement vectors; the data
/// matrix is (L * n_x) x cols.
struct TrajectoryMatrix {
    EmbeddingKind kind = EmbeddingKind::Hankel;
    Index L = 0;
    Index n_x = 0;
    Mat data;

    Index rows() const { return data.rows(); }
    Index cols() const { return data.cols(); }

    /// Number of samples the embedding was built from.
    Index sample_count() const {
        return kind == EmbeddingKind::Hankel ? L + cols() - 1 : L * cols();
    }
};

/// Eq.-(2)-style block Hankel embedding: column j stacks samples
/// x_{j}, ..., x_{j+L-1} of the window, oldest on top.
TrajectoryMatrix build_hankel(const MeasurementBuffer& buf, Index L);

/// Block Page embedding: column j is the j-th non-overlapping length-L
/// segment of the window. Requires L | N.
TrajectoryMatrix build_page(const MeasurementBuffer& buf, Index L);

/// Orthogonal projection of an arbitrary (L * n_x) x cols matrix onto the
/// Hankel subspace: every block anti-diagonal is replaced by its mean.
/// Closest Hankel matrix in Frobenius norm; idempotent.
TrajectoryMatrix project_hankel(const Mat& M, Index L, Index n_x);

/// Invert the Hankel embedding. H must satisfy the anti-diagonal block
/// constancy invariant within tolerance; throws NotConsistent otherwise.
/// The tolerance is 1e-9 times the max-abs entry of H.
std::vector<Vec> extract_signal(const TrajectoryMatrix& H);

} // namespace hdmd
