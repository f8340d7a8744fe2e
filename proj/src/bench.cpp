#include "fgx/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "fgx/pipeline.hpp"

namespace fgx {

namespace {

int parse_dimension(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
        throw std::invalid_argument("bad size '" + std::string(whole) + "', expected WxH");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Uniform in [0, 1) from the top 53 bits; avoids the implementation-defined
// std::uniform_real_distribution so scenes match across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<FrameSize> reference_sizes() {
    return {{324, 412},  {376, 528},  {438, 533},  {600, 400},   {422, 600},   {424, 800},
            {600, 722},  {800, 587},  {1000, 768}, {1050, 746},  {1200, 797},  {1221, 817},
            {1366, 768}, {1546, 870}, {1920, 1200}, {2560, 1600}};
}

std::vector<FrameSize> parse_sizes(std::string_view text) {
    std::vector<FrameSize> sizes;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto x = item.find_first_of("xX*");
        if (x == std::string_view::npos) throw std::invalid_argument("bad size '" + std::string(item) + "', expected WxH");
        sizes.push_back({parse_dimension(item.substr(0, x), item), parse_dimension(item.substr(x + 1), item)});
    }
    if (sizes.empty()) throw std::invalid_argument("no sizes given");
    return sizes;
}

bool Ellipse::contains(int row, int col) const noexcept {
    const double y = row - center_row;
    const double x = col - center_col;
    const double cs = std::cos(angle);
    const double sn = std::sin(angle);
    const double u = (x * cs + y * sn) / semi_major;
    const double v = (-x * sn + y * cs) / semi_minor;
    return u * u + v * v <= 1.0;
}

SyntheticScene synthetic_scene(FrameSize size, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(size.width) << 32) ^ static_cast<std::uint64_t>(size.height));
    const double h = size.height;
    const double w = size.width;
    const double shorter = std::min(h, w);

    Ellipse e;
    e.center_row = h * (0.45 + 0.1 * unit(rng));
    e.center_col = w * (0.45 + 0.1 * unit(rng));
    e.semi_major = shorter * (0.25 + 0.1 * unit(rng));
    e.semi_minor = e.semi_major * (0.55 + 0.35 * unit(rng));
    e.angle = std::numbers::pi * unit(rng);

    const Rgb background{236, 234, 228};
    const Rgb object{static_cast<std::uint8_t>(30 + 60 * unit(rng)), static_cast<std::uint8_t>(50 + 60 * unit(rng)),
                     static_cast<std::uint8_t>(90 + 80 * unit(rng))};

    ColorImage img(size.height, size.width, background);
    for (int r = 0; r < size.height; ++r)
        for (int c = 0; c < size.width; ++c)
            if (e.contains(r, c)) img(r, c) = object;
    return {std::move(img), e};
}

double median(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("median of empty sample");
    std::sort(samples.begin(), samples.end());
    const auto n = samples.size();
    return n % 2 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

double time_pipeline(const ColorImage& img, const CannyParams& params, int reps, Exec exec) {
    if (reps < 1) throw std::invalid_argument("repetitions must be >= 1");
    using clock = std::chrono::steady_clock;
    (void)extract_pipeline(img, params, kWhite, exec);  // warm-up
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i) {
        const auto t0 = clock::now();
        const Extraction out = extract_pipeline(img, params, kWhite, exec);
        const auto t1 = clock::now();
        samples.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    return median(std::move(samples));
}

BenchRecord bench_image(std::string name, const ColorImage& img, const CannyParams& params, int reps, Exec exec) {
    BenchRecord rec;
    rec.name = std::move(name);
    rec.height = img.height();
    rec.width = img.width();
    rec.pixels = static_cast<std::int64_t>(img.height()) * img.width();
    rec.reps = reps;
    rec.elapsed_s = time_pipeline(img, params, reps, exec);
    return rec;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << kBenchCsvHeader << '\n';
    const auto old_precision = out.precision(9);
    for (const auto& r : records) {
        const bool quote = r.name.find_first_of(",\"\n") != std::string::npos;
        if (quote) {
            out << '"';
            for (char ch : r.name) out << (ch == '"' ? "\"\"" : std::string(1, ch));
            out << '"';
        } else {
            out << r.name;
        }
        out << ',' << r.height << ',' << r.width << ',' << r.pixels << ',' << r.elapsed_s << ',' << r.reps << '\n';
    }
    out.precision(old_precision);
}

double ols_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs >= 2 paired points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("slope undefined: all x values equal");
    return sxy / sxx;
}

double loglog_slope(std::span<const BenchRecord> records) {
    std::vector<double> lx, ly;
    for (const auto& r : records) {
        if (!(r.elapsed_s > 0.0)) throw std::invalid_argument("elapsed time must be positive for log-log fit");
        lx.push_back(std::log(static_cast<double>(r.pixels)));
        ly.push_back(std::log(r.elapsed_s));
    }
    return ols_slope(lx, ly);
}

}  // namespace fgx
