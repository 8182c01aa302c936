#pragma once

#include <optional>
#include <vector>

#include "hdmd/cadzow.hpp"
#include "hdmd/embedding.hpp"
#include "hdmd/predictor.hpp"
#include "hdmd/spectrum.hpp"
#include "hdmd/types.hpp"

namespace hdmd {

struct PipelineConfig {
    Index L = 10;      // embedding window length
    Index N = 250;     // buffer length; must satisfy L | N and N / L >= L * n_x
    Index n_x = 1;     // measurement dimension
    Index horizon = 31; // forecast steps per window
    CadzowConfig cadzow{}; // rank is overwritten per window with the SVHT estimate
    double dt = 0.02;  // sample period, seconds

    void validate() const;
};

/// One record per processed window.
struct StepOutput {
    long t = 0;            // index of the newest sample in the window
    Vec denoised_current;  // last block of the denoised Hankel
    Forecast forecast;
    RankEstimate rank;
    CVec eigenvalues;      // predictor spectrum; empty if the eigensolve failed
    double spectral_radius = 0.0;
    double latency_s = 0.0; // wall clock of this step
};

/// Sliding-window denoise-and-forecast pipeline. Each push appends one
/// sample; once the buffer has filled, every push runs
/// Page -> SVHT -> Hankel -> Cadzow(r_hat) -> fit -> rollout and emits a
/// StepOutput. One instance is single-threaded; distinct instances are
/// independent.
class Pipeline {
public:
    explicit Pipeline(const PipelineConfig& cfg);

    std::optional<StepOutput> push(const Vec& sample);
    std::optional<StepOutput> push(double sample); // n_x == 1 convenience

    std::vector<StepOutput> run_stream(const std::vector<Vec>& samples);
    std::vector<StepOutput> run_stream(const std::vector<double>& samples);

    const PipelineConfig& config() const { return cfg_; }
    long samples_seen() const { return pushed_; }

private:
    StepOutput step();

    PipelineConfig cfg_;
    MeasurementBuffer buffer_;
    long pushed_ = 0;
};

} // namespace hdmd
