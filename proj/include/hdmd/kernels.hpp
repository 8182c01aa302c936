#pragma once

#include "hdmd/types.hpp"

namespace hdmd::kernels {

// Each kernel has a serial reference implementation and an OpenMP variant
// that distributes independent output elements across threads. The two
// compute every element with the same expression in the same order, so
// their results are bitwise identical; tests assert this and tools/bench
// compares their throughput.

namespace serial {

/// Replace each block anti-diagonal of M (blocks are n_x consecutive rows)
/// with its arithmetic mean. Constant anti-diagonals are copied through
/// unchanged so the map is exactly idempotent.
void antidiag_average(const Mat& M, Index L, Index n_x, Mat& out);

/// out = U(:,0:r) * diag(s(0:r)) * V(:,0:r)^T, column by column.
void truncated_reconstruct(const Mat& U, const Vec& s, const Mat& V, Index r, Mat& out);

/// Fill the block Hankel embedding of window w (n_x x N, oldest first).
void hankel_fill(const Mat& w, Index L, Mat& out);

} // namespace serial

namespace par {

void antidiag_average(const Mat& M, Index L, Index n_x, Mat& out);
void truncated_reconstruct(const Mat& U, const Vec& s, const Mat& V, Index r, Mat& out);
void hankel_fill(const Mat& w, Index L, Mat& out);

} // namespace par

// Dispatchers: honor the global ExecMode, falling back to the serial path
// for inputs too small to amortize thread startup.

void antidiag_average(const Mat& M, Index L, Index n_x, Mat& out);
void truncated_reconstruct(const Mat& U, const Vec& s, const Mat& V, Index r, Mat& out);
void hankel_fill(const Mat& w, Index L, Mat& out);

} // namespace hdmd::kernels
