// Benchmark of the OpenMP kernels against their serial reference, plus
// end-to-end pipeline throughput at the default configuration.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hdmd/cadzow.hpp"
#include "hdmd/embedding.hpp"
#include "hdmd/kernels.hpp"
#include "hdmd/pipeline.hpp"
#include "hdmd/rng.hpp"
#include "hdmd/simgen.hpp"

using namespace hdmd;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    // One warm-up, then best-of-three timed batches.
    fn();
    double best = 1e300;
    for (int batch = 0; batch < 3; ++batch) {
        const auto t0 = std::chrono::steady_clock::now();
        for (int r = 0; r < reps; ++r) {
            fn();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count() /
            reps;
        best = std::min(best, ms);
    }
    return best;
}

Mat random_mat(Rng& rng, Index rows, Index cols) {
    Mat M(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            M(i, j) = rng.normal();
        }
    }
    return M;
}

void bench_antidiag(Index L, Index cols, int reps) {
    Rng rng(1);
    const Mat M = random_mat(rng, L, cols);
    Mat out_serial(L, cols), out_par(L, cols);
    const double t_serial =
        time_ms([&] { kernels::serial::antidiag_average(M, L, 1, out_serial); }, reps);
    const double t_par = time_ms([&] { kernels::par::antidiag_average(M, L, 1, out_par); }, reps);
    const bool same = (out_serial.array() == out_par.array()).all();
    std::printf("antidiag_average     %5ld x %-6ld  serial %9.3f ms  omp %9.3f ms  x%.2f  %s\n",
                static_cast<long>(L), static_cast<long>(cols), t_serial, t_par,
                t_serial / t_par, same ? "bitwise-equal" : "MISMATCH");
}

void bench_reconstruct(Index rows, Index cols, Index r, int reps) {
    Rng rng(2);
    const Mat M = random_mat(rng, rows, cols);
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Mat out_serial(rows, cols), out_par(rows, cols);
    const double t_serial = time_ms(
        [&] {
            kernels::serial::truncated_reconstruct(svd.matrixU(), svd.singularValues(),
                                                   svd.matrixV(), r, out_serial);
        },
        reps);
    const double t_par = time_ms(
        [&] {
            kernels::par::truncated_reconstruct(svd.matrixU(), svd.singularValues(),
                                                svd.matrixV(), r, out_par);
        },
        reps);
    const bool same = (out_serial.array() == out_par.array()).all();
    std::printf("truncated_reconstr.  %5ld x %-6ld  serial %9.3f ms  omp %9.3f ms  x%.2f  %s\n",
                static_cast<long>(rows), static_cast<long>(cols), t_serial, t_par,
                t_serial / t_par, same ? "bitwise-equal" : "MISMATCH");
}

void bench_hankel_fill(Index L, Index n, int reps) {
    Rng rng(3);
    const Mat w = random_mat(rng, 1, n);
    Mat out_serial(L, n - L + 1), out_par(L, n - L + 1);
    const double t_serial = time_ms([&] { kernels::serial::hankel_fill(w, L, out_serial); }, reps);
    const double t_par = time_ms([&] { kernels::par::hankel_fill(w, L, out_par); }, reps);
    const bool same = (out_serial.array() == out_par.array()).all();
    std::printf("hankel_fill          %5ld x %-6ld  serial %9.3f ms  omp %9.3f ms  x%.2f  %s\n",
                static_cast<long>(L), static_cast<long>(n - L + 1), t_serial, t_par,
                t_serial / t_par, same ? "bitwise-equal" : "MISMATCH");
}

void bench_cadzow(Index N, Index L, int reps) {
    Rng rng(4);
    MeasurementBuffer buf(N, 1, 0.02);
    for (Index k = 0; k < N; ++k) {
        Vec x(1);
        x(0) = std::sin(0.01 * static_cast<double>(k)) + rng.normal(0.1);
        buf.push(x);
    }
    const auto H = build_hankel(buf, L);
    CadzowConfig cfg;
    cfg.iterations = 3;
    cfg.rank = 3;
    set_exec_mode(ExecMode::Serial);
    const double t_serial = time_ms([&] { cadzow_denoise(H, cfg); }, reps);
    set_exec_mode(ExecMode::Parallel);
    const double t_par = time_ms([&] { cadzow_denoise(H, cfg); }, reps);
    std::printf("cadzow_denoise J=3   %5ld x %-6ld  serial %9.3f ms  omp %9.3f ms  x%.2f\n",
                static_cast<long>(L), static_cast<long>(N - L + 1), t_serial, t_par,
                t_serial / t_par);
}

void bench_pipeline() {
    UnicycleProfile prof;
    prof.duration = 40.0;
    const auto clean = unicycle_velocity(prof);
    NoiseModel nm;
    nm.sigma_x = 0.25;
    nm.seed = 1;
    const auto noisy = add_noise(clean, nm);
    for (ExecMode mode : {ExecMode::Serial, ExecMode::Parallel}) {
        set_exec_mode(mode);
        PipelineConfig cfg;
        Pipeline pipe(cfg);
        const auto t0 = std::chrono::steady_clock::now();
        const auto outs = pipe.run_stream(noisy);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        std::printf("pipeline defaults    %s: %zu steps in %.0f ms (%.3f ms/step)\n",
                    mode == ExecMode::Serial ? "serial  " : "parallel", outs.size(), ms,
                    ms / static_cast<double>(outs.size()));
    }
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n\n");
#endif
    bench_antidiag(10, 241, 200);
    bench_antidiag(100, 5000, 20);
    bench_antidiag(200, 20000, 5);
    std::printf("\n");
    bench_reconstruct(10, 240, 3, 200);
    bench_reconstruct(100, 5000, 10, 20);
    bench_reconstruct(200, 20000, 10, 5);
    std::printf("\n");
    bench_hankel_fill(10, 250, 200);
    bench_hankel_fill(100, 20000, 20);
    std::printf("\n");
    bench_cadzow(250, 10, 50);
    bench_cadzow(5000, 100, 3);
    std::printf("\n");
    bench_pipeline();
    return 0;
}
