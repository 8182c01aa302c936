#include "hdmd/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "hdmd/errors.hpp"

namespace hdmd::io {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

double parse_double(const std::string& text, const std::string& path, std::size_t row) {
    double v = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
        throw MalformedRow(path + ": row " + std::to_string(row) + ": bad numeric field '" +
                           text + "'");
    }
    return v;
}

long parse_long(const std::string& text, const std::string& path, std::size_t row) {
    long v = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
        throw MalformedRow(path + ": row " + std::to_string(row) + ": bad index field '" +
                           text + "'");
    }
    return v;
}

} // namespace

SeriesReader::SeriesReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) {
        throw IoError("cannot open for reading: " + path);
    }
    std::string line;
    if (!std::getline(in_, line)) {
        throw MalformedRow(path + ": missing header row");
    }
    const auto header = split_csv_row(line);
    if (header.empty() || header.front() != "index") {
        throw MalformedRow(path + ": header must start with 'index'");
    }
    n_x_ = static_cast<Index>(header.size()) - 1;
    if (n_x_ < 1) {
        throw MalformedRow(path + ": header has no value columns");
    }
}

std::optional<std::pair<long, Vec>> SeriesReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++row_;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (static_cast<Index>(fields.size()) != n_x_ + 1) {
            throw MalformedRow(path_ + ": row " + std::to_string(row_) + ": expected " +
                               std::to_string(n_x_ + 1) + " fields, found " +
                               std::to_string(fields.size()));
        }
        const long idx = parse_long(fields[0], path_, row_);
        Vec v(n_x_);
        for (Index j = 0; j < n_x_; ++j) {
            v(j) = parse_double(fields[static_cast<std::size_t>(j) + 1], path_, row_);
        }
        return std::make_pair(idx, std::move(v));
    }
    return std::nullopt;
}

std::vector<double> Series::scalars() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const Vec& v : values) {
        out.push_back(v(0));
    }
    return out;
}

Series make_series(const std::vector<double>& scalars, long first_index) {
    Series s;
    s.index.reserve(scalars.size());
    s.values.reserve(scalars.size());
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        s.index.push_back(first_index + static_cast<long>(i));
        Vec v(1);
        v(0) = scalars[i];
        s.values.push_back(std::move(v));
    }
    return s;
}

Series make_series(const std::vector<Vec>& samples, long first_index) {
    Series s;
    s.index.reserve(samples.size());
    s.values = samples;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        s.index.push_back(first_index + static_cast<long>(i));
    }
    return s;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        throw IoError("format_double: conversion failed");
    }
    return std::string(buf, ptr);
}

void write_series_csv(const std::string& path, const Series& series) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    const Index n_x = series.dim();
    out << "index";
    for (Index j = 0; j < n_x; ++j) {
        out << ",x" << j;
    }
    out << "\n";
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        out << series.index[i];
        for (Index j = 0; j < n_x; ++j) {
            out << ',' << format_double(series.values[i](j));
        }
        out << "\n";
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

Series read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw MalformedRow(path + ": missing header row");
    }
    const auto header = split_csv_row(line);
    if (header.empty() || header.front() != "index") {
        throw MalformedRow(path + ": header must start with 'index'");
    }
    const auto n_x = static_cast<Index>(header.size()) - 1;
    if (n_x < 1) {
        throw MalformedRow(path + ": header has no value columns");
    }

    Series series;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (static_cast<Index>(fields.size()) != n_x + 1) {
            throw MalformedRow(path + ": row " + std::to_string(row) + ": expected " +
                               std::to_string(n_x + 1) + " fields, found " +
                               std::to_string(fields.size()));
        }
        series.index.push_back(parse_long(fields[0], path, row));
        Vec v(n_x);
        for (Index j = 0; j < n_x; ++j) {
            v(j) = parse_double(fields[static_cast<std::size_t>(j) + 1], path, row);
        }
        series.values.push_back(std::move(v));
    }
    return series;
}

namespace {

nlohmann::json vec_to_json(const Vec& v) {
    if (v.size() == 1) {
        return v(0);
    }
    nlohmann::json arr = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i) {
        arr.push_back(v(i));
    }
    return arr;
}

Vec vec_from_json(const nlohmann::json& j) {
    if (j.is_number()) {
        Vec v(1);
        v(0) = j.get<double>();
        return v;
    }
    Vec v(static_cast<Index>(j.size()));
    for (Index i = 0; i < v.size(); ++i) {
        v(i) = j[static_cast<std::size_t>(i)].get<double>();
    }
    return v;
}

} // namespace

nlohmann::json step_to_json(const StepOutput& step) {
    nlohmann::json rec;
    rec["t"] = step.t;
    rec["denoised_current"] = vec_to_json(step.denoised_current);
    nlohmann::json forecasts = nlohmann::json::array();
    for (const Vec& x : step.forecast.values) {
        forecasts.push_back(vec_to_json(x));
    }
    rec["forecasts"] = std::move(forecasts);
    rec["r_hat"] = step.rank.r_hat;
    rec["sigma2_hat"] = step.rank.sigma2_hat;
    rec["spectral_radius"] = step.spectral_radius;
    rec["latency_s"] = step.latency_s;
    if (step.forecast.diverged) {
        rec["diverged"] = true;
    }
    return rec;
}

void write_steps_jsonl(const std::string& path, const std::vector<StepOutput>& steps,
                       const nlohmann::json* summary) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    for (const StepOutput& s : steps) {
        out << step_to_json(s).dump() << "\n";
    }
    if (summary != nullptr) {
        nlohmann::json line;
        line["summary"] = *summary;
        out << line.dump() << "\n";
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

std::vector<RunRecord> read_steps_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    std::vector<RunRecord> records;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw MalformedRow(path + ": row " + std::to_string(row) + ": " + e.what());
        }
        if (j.contains("summary")) {
            continue;
        }
        RunRecord rec;
        rec.t = j.at("t").get<long>();
        rec.denoised_current = vec_from_json(j.at("denoised_current"));
        for (const auto& f : j.at("forecasts")) {
            rec.forecasts.push_back(vec_from_json(f));
        }
        rec.r_hat = j.at("r_hat").get<Index>();
        rec.sigma2_hat = j.at("sigma2_hat").get<double>();
        // Non-finite values serialize as null.
        const auto& sr = j.at("spectral_radius");
        rec.spectral_radius =
            sr.is_null() ? std::numeric_limits<double>::quiet_NaN() : sr.get<double>();
        rec.latency_s = j.at("latency_s").get<double>();
        records.push_back(std::move(rec));
    }
    return records;
}

void write_json(const std::string& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << doc.dump(2) << "\n";
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return doc;
}

} // namespace hdmd::io
