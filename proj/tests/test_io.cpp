#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "hdmd/io.hpp"
#include "hdmd/pipeline.hpp"
#include "support.hpp"

using namespace hdmd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hdmd_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("series csv round trip preserves bits") {
    TempDir tmp;
    Rng rng(1);
    std::vector<Vec> samples;
    for (int k = 0; k < 50; ++k) {
        samples.push_back(testsupport::random_vector(rng, 3));
    }
    const auto series = io::make_series(samples, 7);
    io::write_series_csv(tmp.file("s.csv"), series);
    const auto back = io::read_series_csv(tmp.file("s.csv"));
    REQUIRE(back.values.size() == samples.size());
    CHECK(back.dim() == 3);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(back.index[i] == static_cast<long>(i) + 7);
        CHECK(testsupport::bitwise_equal(back.values[i], samples[i]));
    }
}

TEST_CASE("series csv writes are byte deterministic") {
    TempDir tmp;
    Rng rng(2);
    std::vector<double> vals;
    for (int k = 0; k < 100; ++k) {
        vals.push_back(rng.normal());
    }
    io::write_series_csv(tmp.file("a.csv"), io::make_series(vals));
    io::write_series_csv(tmp.file("b.csv"), io::make_series(vals));
    std::ifstream a(tmp.file("a.csv")), b(tmp.file("b.csv"));
    const std::string sa((std::istreambuf_iterator<char>(a)), {});
    const std::string sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(sa == sb);
    CHECK(sa.rfind("index,x0\n", 0) == 0);
}

TEST_CASE("csv reader reports malformed rows with their number") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("bad.csv"));
        out << "index,x0\n0,1.5\n1,oops\n";
    }
    try {
        io::read_series_csv(tmp.file("bad.csv"));
        FAIL("expected MalformedRow");
    } catch (const MalformedRow& e) {
        CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    }

    {
        std::ofstream out(tmp.file("short.csv"));
        out << "index,x0,x1\n0,1.0\n";
    }
    CHECK_THROWS_AS(io::read_series_csv(tmp.file("short.csv")), MalformedRow);

    {
        std::ofstream out(tmp.file("nohdr.csv"));
        out << "0,1.0\n";
    }
    CHECK_THROWS_AS(io::read_series_csv(tmp.file("nohdr.csv")), MalformedRow);

    CHECK_THROWS_AS(io::read_series_csv(tmp.file("missing.csv")), IoError);
}

TEST_CASE("step records survive a jsonl round trip") {
    TempDir tmp;
    // Produce a couple of real records through the pipeline.
    PipelineConfig cfg;
    cfg.L = 8;
    cfg.N = 64;
    cfg.horizon = 6;
    cfg.dt = 0.1;
    Pipeline pipe(cfg);
    std::vector<StepOutput> steps;
    Rng rng(3);
    for (int k = 0; k < 70; ++k) {
        if (auto out = pipe.push(std::sin(0.2 * k) + rng.normal(0.05))) {
            steps.push_back(std::move(*out));
        }
    }
    REQUIRE(steps.size() == 7);
    io::write_steps_jsonl(tmp.file("run.jsonl"), steps);
    const auto records = io::read_steps_jsonl(tmp.file("run.jsonl"));
    REQUIRE(records.size() == steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        CHECK(records[i].t == steps[i].t);
        CHECK(records[i].r_hat == steps[i].rank.r_hat);
        CHECK(records[i].sigma2_hat == steps[i].rank.sigma2_hat);
        CHECK(records[i].spectral_radius == steps[i].spectral_radius);
        CHECK(testsupport::bitwise_equal(records[i].denoised_current,
                                         steps[i].denoised_current));
        REQUIRE(records[i].forecasts.size() == steps[i].forecast.values.size());
        for (std::size_t j = 0; j < records[i].forecasts.size(); ++j) {
            CHECK(testsupport::bitwise_equal(records[i].forecasts[j],
                                             steps[i].forecast.values[j]));
        }
    }
}

TEST_CASE("jsonl reader skips the summary line and reports bad rows") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("mixed.jsonl"));
        out << R"({"t":9,"denoised_current":1.5,"forecasts":[1.0,2.0],"r_hat":1,)"
            << R"("sigma2_hat":0.1,"spectral_radius":0.9,"latency_s":0.001})" << "\n";
        out << R"({"summary":{"windows":1}})" << "\n";
    }
    const auto records = io::read_steps_jsonl(tmp.file("mixed.jsonl"));
    REQUIRE(records.size() == 1);
    CHECK(records[0].t == 9);
    CHECK(records[0].forecasts.size() == 2);

    {
        std::ofstream out(tmp.file("broken.jsonl"));
        out << "{not json}\n";
    }
    try {
        io::read_steps_jsonl(tmp.file("broken.jsonl"));
        FAIL("expected MalformedRow");
    } catch (const MalformedRow& e) {
        CHECK(std::string(e.what()).find("row 1") != std::string::npos);
    }
}

TEST_CASE("format_double round trips exactly") {
    Rng rng(4);
    for (int k = 0; k < 200; ++k) {
        const double v = rng.normal() * std::pow(10.0, static_cast<int>(rng.uniform() * 20) - 10);
        const std::string text = io::format_double(v);
        CHECK(std::stod(text) == v);
    }
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(1.0) == "1");
}
