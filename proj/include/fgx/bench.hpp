#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fgx/canny.hpp"
#include "fgx/raster.hpp"

namespace fgx {

struct FrameSize {
    int width = 0;
    int height = 0;
    friend bool operator==(const FrameSize&, const FrameSize&) = default;
};

// The sixteen WxH frame sizes of the reference timing sweep, 324x412 .. 2560x1600.
std::vector<FrameSize> reference_sizes();

// "WxH,WxH,..." -> sizes. Throws std::invalid_argument on malformed input.
std::vector<FrameSize> parse_sizes(std::string_view text);

struct Ellipse {
    double center_row = 0.0;
    double center_col = 0.0;
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double angle = 0.0;  // radians, rotation of the major axis from the column axis

    bool contains(int row, int col) const noexcept;
};

struct SyntheticScene {
    ColorImage image;
    Ellipse shape;
};

// Dark ellipse on a light plain background. Same (size, seed) -> same bytes.
SyntheticScene synthetic_scene(FrameSize size, std::uint64_t seed = 2013);

struct BenchRecord {
    std::string name;
    int height = 0;
    int width = 0;
    std::int64_t pixels = 0;
    double elapsed_s = 0.0;
    int reps = 1;
};

inline constexpr std::string_view kBenchCsvHeader = "name,height,width,pixels,elapsed_s,reps";

double median(std::vector<double> samples);

// Median wall-clock seconds of `reps` extract_pipeline runs after one
// discarded warm-up run.
double time_pipeline(const ColorImage& img, const CannyParams& params, int reps, Exec exec = Exec::parallel);

BenchRecord bench_image(std::string name, const ColorImage& img, const CannyParams& params, int reps,
                        Exec exec = Exec::parallel);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

// Ordinary least-squares slope of log(elapsed) against log(pixels).
double loglog_slope(std::span<const BenchRecord> records);

// Least-squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

}  // namespace fgx
