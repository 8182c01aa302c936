#include "hdmd/pipeline.hpp"

#include <chrono>
#include <string>

namespace hdmd {

void PipelineConfig::validate() const {
    if (L < 1 || N < 1 || n_x < 1 || horizon < 1 || cadzow.iterations < 1) {
        throw InvalidConfig("pipeline config: all counts must be positive");
    }
    if (!(dt > 0.0)) {
        throw InvalidConfig("pipeline config: dt must be positive");
    }
    if (N % L != 0) {
        throw InvalidConfig("pipeline config: N=" + std::to_string(N) +
                            " must be divisible by L=" + std::to_string(L));
    }
    if (N / L < L * n_x) {
        throw InvalidConfig("pipeline config: Page aspect ratio requires N/L >= L*n_x (" +
                            std::to_string(N / L) + " < " + std::to_string(L * n_x) + ")");
    }
}

namespace {

Index validated_capacity(const PipelineConfig& cfg) {
    cfg.validate();
    return cfg.N;
}

} // namespace

Pipeline::Pipeline(const PipelineConfig& cfg)
    : cfg_(cfg), buffer_(validated_capacity(cfg), cfg.n_x, cfg.dt) {}

std::optional<StepOutput> Pipeline::push(const Vec& sample) {
    if (sample.size() != cfg_.n_x) {
        throw DimensionMismatch("pipeline push: sample dimension " +
                                std::to_string(sample.size()) + ", expected " +
                                std::to_string(cfg_.n_x));
    }
    buffer_.push(sample);
    ++pushed_;
    if (!buffer_.full()) {
        return std::nullopt;
    }
    try {
        return step();
    } catch (const Error& e) {
        throw StepFailure("pipeline step at t=" + std::to_string(pushed_ - 1) + ": " + e.what());
    }
}

std::optional<StepOutput> Pipeline::push(double sample) {
    Vec v(1);
    v(0) = sample;
    return push(v);
}

StepOutput Pipeline::step() {
    const auto t0 = std::chrono::steady_clock::now();

    const TrajectoryMatrix page = build_page(buffer_, cfg_.L);
    RankEstimate rank = svht_rank(page);

    const TrajectoryMatrix hankel = build_hankel(buffer_, cfg_.L);
    CadzowConfig cadzow = cfg_.cadzow;
    cadzow.rank = rank.r_hat;
    const TrajectoryMatrix denoised = cadzow_denoise(hankel, cadzow);

    const PredictorModel model = fit_predictor(denoised, cfg_.dt);
    Forecast forecast = rollout(model, cfg_.horizon, rank.sigma2_hat);

    StepOutput out;
    out.t = pushed_ - 1;
    out.denoised_current = denoised.data.col(denoised.cols() - 1).tail(cfg_.n_x);
    out.forecast = std::move(forecast);
    out.rank = std::move(rank);
    out.eigenvalues = model.eigenvalues;
    out.spectral_radius = spectral_radius(model);
    out.latency_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::vector<StepOutput> Pipeline::run_stream(const std::vector<Vec>& samples) {
    std::vector<StepOutput> out;
    if (static_cast<Index>(samples.size()) >= cfg_.N) {
        out.reserve(samples.size() - static_cast<std::size_t>(cfg_.N) + 1);
    }
    for (const Vec& x : samples) {
        if (auto step_out = push(x)) {
            out.push_back(std::move(*step_out));
        }
    }
    return out;
}

std::vector<StepOutput> Pipeline::run_stream(const std::vector<double>& samples) {
    std::vector<StepOutput> out;
    for (double x : samples) {
        if (auto step_out = push(x)) {
            out.push_back(std::move(*step_out));
        }
    }
    return out;
}

} // namespace hdmd
