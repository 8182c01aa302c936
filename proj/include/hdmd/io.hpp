#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hdmd/pipeline.hpp"
#include "hdmd/types.hpp"

namespace hdmd::io {

/// A measurement series as stored on disk: header row, integer index
/// column, then n_x value columns ('.' decimal separator, UTF-8).
struct Series {
    std::vector<long> index;
    std::vector<Vec> values;

    Index dim() const { return values.empty() ? 0 : values.front().size(); }
    std::vector<double> scalars() const; // first component of every sample
};

Series make_series(const std::vector<double>& scalars, long first_index = 0);
Series make_series(const std::vector<Vec>& samples, long first_index = 0);

/// Row-by-row CSV reader for streaming runs whose memory must stay
/// independent of the stream length.
class SeriesReader {
public:
    explicit SeriesReader(const std::string& path);

    Index dim() const { return n_x_; }
    /// Next (index, sample) row, or nullable at end of file.
    std::optional<std::pair<long, Vec>> next();

private:
    std::string path_;
    std::ifstream in_;
    Index n_x_ = 0;
    std::size_t row_ = 1;
};

/// Shortest round-trip decimal rendering; identical input bits give
/// identical bytes.
std::string format_double(double v);

void write_series_csv(const std::string& path, const Series& series);
Series read_series_csv(const std::string& path);

/// One JSON object per StepOutput, in the run output order.
nlohmann::json step_to_json(const StepOutput& step);
void write_steps_jsonl(const std::string& path, const std::vector<StepOutput>& steps,
                       const nlohmann::json* summary = nullptr);

/// Parsed-back run record (the fields the scorer consumes).
struct RunRecord {
    long t = 0;
    Vec denoised_current;
    std::vector<Vec> forecasts;
    Index r_hat = 0;
    double sigma2_hat = 0.0;
    double spectral_radius = 0.0;
    double latency_s = 0.0;
};

std::vector<RunRecord> read_steps_jsonl(const std::string& path);

void write_json(const std::string& path, const nlohmann::json& doc);
nlohmann::json read_json(const std::string& path);

} // namespace hdmd::io
