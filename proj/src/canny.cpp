#include "fgx/canny.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fgx {

namespace {

// tan(22.5 deg), the sector boundary slope.
constexpr double kTan22_5 = 0.41421356237309504880;

// Each output sample sums the centre tap, then the mirrored pairs from the
// inside out. Pair sums do not depend on scan direction, so the pass is
// exactly reflection invariant.
Grid<double> blur_rows(const Grid<double>& src, const std::vector<double>& k, Exec exec) {
    const int h = src.height();
    const int w = src.width();
    const int radius = static_cast<int>(k.size() / 2);
    Grid<double> dst(h, w);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int r = 0; r < h; ++r) {
        auto in = src.row(r);
        auto out = dst.row(r);
        for (int c = 0; c < w; ++c) {
            double acc = k[radius] * in[c];
            for (int d = 1; d <= radius; ++d)
                acc += k[radius + d] * (in[clamp_index(c - d, w)] + in[clamp_index(c + d, w)]);
            out[c] = acc;
        }
    }
    return dst;
}

Grid<double> blur_cols(const Grid<double>& src, const std::vector<double>& k, Exec exec) {
    const int h = src.height();
    const int w = src.width();
    const int radius = static_cast<int>(k.size() / 2);
    Grid<double> dst(h, w);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int r = 0; r < h; ++r) {
        auto out = dst.row(r);
        auto centre = src.row(r);
        for (int c = 0; c < w; ++c) out[c] = k[radius] * centre[c];
        for (int d = 1; d <= radius; ++d) {
            auto up = src.row(clamp_index(r - d, h));
            auto down = src.row(clamp_index(r + d, h));
            const double kd = k[radius + d];
            for (int c = 0; c < w; ++c) out[c] += kd * (up[c] + down[c]);
        }
    }
    return dst;
}

}  // namespace

void CannyParams::validate() const {
    if (!(low_threshold > 0.0 && low_threshold < high_threshold && high_threshold < 1.0))
        throw std::invalid_argument("thresholds must satisfy 0 < low < high < 1 (got low=" +
                                    std::to_string(low_threshold) + ", high=" + std::to_string(high_threshold) + ")");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("sigma must be positive (got " + std::to_string(sigma) + ")");
}

std::vector<double> gaussian_kernel(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be positive");
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
    const double denom = 2.0 * sigma * sigma;
    for (int x = -radius; x <= radius; ++x) k[x + radius] = std::exp(-static_cast<double>(x) * x / denom);
    double sum = 0.0;
    for (double v : k) sum += v;
    for (double& v : k) v /= sum;
    return k;
}

GrayImage gaussian_blur(const GrayImage& img, double sigma, Exec exec) {
    const auto k = gaussian_kernel(sigma);
    const Grid<double>& src = img;
    const Grid<double> hv = blur_cols(blur_rows(src, k, exec), k, exec);
    const Grid<double> vh = blur_rows(blur_cols(src, k, exec), k, exec);

    std::vector<double> out(img.size());
    auto a = hv.values();
    auto b = vh.values();
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = std::clamp(0.5 * (a[i] + b[i]), 0.0, 1.0);
    return GrayImage(img.height(), img.width(), std::move(out));
}

GradientField gradient(const Grid<double>& img, Exec exec) {
    const int h = img.height();
    const int w = img.width();
    GradientField f{Grid<double>(h, w), Grid<double>(h, w), Grid<double>(h, w), Grid<double>(h, w)};
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int r = 0; r < h; ++r) {
        const auto up = img.row(clamp_index(r - 1, h));
        const auto mid = img.row(r);
        const auto down = img.row(clamp_index(r + 1, h));
        for (int c = 0; c < w; ++c) {
            const int cl = clamp_index(c - 1, w);
            const int cr = clamp_index(c + 1, w);
            // Outer taps are added first so a mirrored neighbourhood sums identically.
            const double gx = ((up[cr] - up[cl]) + (down[cr] - down[cl])) + 2.0 * (mid[cr] - mid[cl]);
            const double gy = ((down[cl] - up[cl]) + (down[cr] - up[cr])) + 2.0 * (down[c] - up[c]);
            f.gx(r, c) = gx;
            f.gy(r, c) = gy;
            f.magnitude(r, c) = std::sqrt(gx * gx + gy * gy);
            f.direction(r, c) = std::atan2(gy, gx);
        }
    }
    return f;
}

Sector quantize_direction(double gx, double gy) noexcept {
    const double ax = std::abs(gx);
    const double ay = std::abs(gy);
    if (ay <= kTan22_5 * ax) return Sector::horizontal;
    if (ax <= kTan22_5 * ay) return Sector::vertical;
    return (gx > 0.0) == (gy > 0.0) ? Sector::diagonal45 : Sector::diagonal135;
}

Grid<double> non_max_suppression(const GradientField& field, Exec exec) {
    const int h = field.magnitude.height();
    const int w = field.magnitude.width();
    Grid<double> out(h, w);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const double m = field.magnitude(r, c);
            if (m <= 0.0) continue;
            int dr = 0;
            int dc = 0;
            switch (quantize_direction(field.gx(r, c), field.gy(r, c))) {
                case Sector::horizontal: dc = 1; break;
                case Sector::vertical: dr = 1; break;
                case Sector::diagonal45: dr = 1; dc = 1; break;
                case Sector::diagonal135: dr = 1; dc = -1; break;
            }
            const double a = field.magnitude(clamp_index(r + dr, h), clamp_index(c + dc, w));
            const double b = field.magnitude(clamp_index(r - dr, h), clamp_index(c - dc, w));
            if (m >= a && m >= b) out(r, c) = m;
        }
    }
    return out;
}

EdgeMap hysteresis(const Grid<double>& thinned, const CannyParams& params) {
    params.validate();
    const int h = thinned.height();
    const int w = thinned.width();
    EdgeMap edges(h, w);

    double peak = 0.0;
    for (double v : thinned.values()) peak = std::max(peak, v);
    if (!(peak > 0.0)) return edges;

    Grid<std::uint8_t> weak(h, w, 0);
    std::vector<std::pair<int, int>> stack;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const double v = thinned(r, c) / peak;
            if (v >= params.low_threshold) weak(r, c) = 1;
            if (v >= params.high_threshold) {
                edges(r, c) = 1;
                stack.emplace_back(r, c);
            }
        }
    }

    while (!stack.empty()) {
        const auto [r, c] = stack.back();
        stack.pop_back();
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                const int rr = r + dr;
                const int cc = c + dc;
                if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                if (weak(rr, cc) && !edges(rr, cc)) {
                    edges(rr, cc) = 1;
                    stack.emplace_back(rr, cc);
                }
            }
        }
    }
    return edges;
}

EdgeMap canny(const GrayImage& img, const CannyParams& params, Exec exec) {
    params.validate();
    const GrayImage smooth = gaussian_blur(img, params.sigma, exec);
    const GradientField field = gradient(smooth, exec);
    return hysteresis(non_max_suppression(field, exec), params);
}

}  // namespace fgx
