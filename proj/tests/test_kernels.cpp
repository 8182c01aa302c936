#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/SVD>

#include "hdmd/kernels.hpp"
#include "support.hpp"

using namespace hdmd;

// The OpenMP kernels must agree with the serial reference bit for bit,
// on small shapes and on shapes large enough to cross the parallel
// dispatch threshold.

TEST_CASE("antidiag_average serial and parallel agree bitwise") {
    Rng rng(1);
    struct Shape {
        Index L, n_x, cols;
    };
    for (const auto& [L, n_x, cols] :
         {Shape{3, 1, 5}, Shape{10, 1, 241}, Shape{7, 3, 29}, Shape{64, 2, 700}}) {
        const Mat M = testsupport::random_matrix(rng, L * n_x, cols);
        Mat a(M.rows(), M.cols()), b(M.rows(), M.cols());
        kernels::serial::antidiag_average(M, L, n_x, a);
        kernels::par::antidiag_average(M, L, n_x, b);
        CHECK(testsupport::bitwise_equal(a, b));
    }
}

TEST_CASE("truncated_reconstruct serial and parallel agree bitwise") {
    Rng rng(2);
    struct Shape {
        Index rows, cols, r;
    };
    for (const auto& [rows, cols, r] :
         {Shape{6, 9, 2}, Shape{10, 240, 3}, Shape{80, 900, 12}}) {
        const Mat M = testsupport::random_matrix(rng, rows, cols);
        Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
        Mat a(rows, cols), b(rows, cols);
        kernels::serial::truncated_reconstruct(svd.matrixU(), svd.singularValues(), svd.matrixV(),
                                               r, a);
        kernels::par::truncated_reconstruct(svd.matrixU(), svd.singularValues(), svd.matrixV(),
                                            r, b);
        CHECK(testsupport::bitwise_equal(a, b));
    }
}

TEST_CASE("hankel_fill serial and parallel agree bitwise") {
    Rng rng(3);
    for (Index n : {20, 2000}) {
        const Mat w = testsupport::random_matrix(rng, 2, n);
        const Index L = 8;
        Mat a(L * 2, n - L + 1), b(L * 2, n - L + 1);
        kernels::serial::hankel_fill(w, L, a);
        kernels::par::hankel_fill(w, L, b);
        CHECK(testsupport::bitwise_equal(a, b));
    }
}

TEST_CASE("dispatcher output is independent of the exec mode") {
    Rng rng(4);
    const Mat M = testsupport::random_matrix(rng, 120, 800); // above threshold
    Mat a(M.rows(), M.cols()), b(M.rows(), M.cols());
    const ExecMode before = exec_mode();
    set_exec_mode(ExecMode::Serial);
    kernels::antidiag_average(M, 120, 1, a);
    set_exec_mode(ExecMode::Parallel);
    kernels::antidiag_average(M, 120, 1, b);
    set_exec_mode(before);
    CHECK(testsupport::bitwise_equal(a, b));
}
