#pragma once

// Test-only ground truth built without touching the library's kernels.

#include <cstdint>
#include <random>
#include <vector>

#include "fgx/raster.hpp"

namespace fgx::testing {

// First/last boundary index per scan line by exhaustive search.
inline FillMask brute_force_fill(const EdgeMap& e, bool columns) {
    FillMask m(e.height(), e.width());
    const int lines = columns ? e.width() : e.height();
    const int len = columns ? e.height() : e.width();
    for (int l = 0; l < lines; ++l) {
        int lo = -1, hi = -1;
        for (int i = 0; i < len; ++i) {
            const bool on = columns ? e(i, l) : e(l, i);
            if (on) {
                if (lo < 0) lo = i;
                hi = i;
            }
        }
        if (lo < 0) continue;
        for (int i = lo; i <= hi; ++i) (columns ? m(i, l) : m(l, i)) = 1;
    }
    return m;
}

inline bool in_disk(int r, int c, double cr, double cc, double radius) {
    const double dr = r - cr, dc = c - cc;
    return dr * dr + dc * dc <= radius * radius;
}

inline FillMask disk_region(int h, int w, double cr, double cc, double radius) {
    FillMask m(h, w);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) m(r, c) = in_disk(r, c, cr, cc, radius) ? 1 : 0;
    return m;
}

inline FillMask rect_region(int h, int w, int top, int left, int rect_h, int rect_w) {
    FillMask m(h, w);
    for (int r = top; r < top + rect_h; ++r)
        for (int c = left; c < left + rect_w; ++c) m(r, c) = 1;
    return m;
}

// Region pixels with at least one 4-neighbour outside the region (or on the frame).
inline EdgeMap inner_boundary(const FillMask& region) {
    EdgeMap e(region.height(), region.width());
    auto at = [&](int r, int c) {
        return r >= 0 && r < region.height() && c >= 0 && c < region.width() && region(r, c);
    };
    for (int r = 0; r < region.height(); ++r)
        for (int c = 0; c < region.width(); ++c)
            if (region(r, c) && !(at(r - 1, c) && at(r + 1, c) && at(r, c - 1) && at(r, c + 1))) e(r, c) = 1;
    return e;
}

inline ColorImage paint(const FillMask& region, Rgb inside, Rgb outside) {
    ColorImage img(region.height(), region.width(), outside);
    for (int r = 0; r < region.height(); ++r)
        for (int c = 0; c < region.width(); ++c)
            if (region(r, c)) img(r, c) = inside;
    return img;
}

template <typename A, typename B>
double iou(const A& a, const B& b) {
    std::size_t inter = 0, uni = 0;
    auto x = a.values();
    auto y = b.values();
    for (std::size_t i = 0; i < x.size(); ++i) {
        inter += (x[i] && y[i]);
        uni += (x[i] || y[i]);
    }
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

inline EdgeMap random_edges(std::mt19937& rng, int h, int w, double density) {
    std::bernoulli_distribution on(density);
    EdgeMap e(h, w);
    for (auto& v : e.values()) v = on(rng) ? 1 : 0;
    return e;
}

// Intensities drawn from the 256 representable 8-bit levels.
inline GrayImage random_gray(std::mt19937& rng, int h, int w) {
    std::uniform_int_distribution<int> level(0, 255);
    std::vector<double> px(static_cast<std::size_t>(h) * w);
    for (auto& v : px) v = level(rng) / 255.0;
    return GrayImage(h, w, std::move(px));
}

template <typename A, typename B>
bool subset(const A& a, const B& b) {
    auto x = a.values();
    auto y = b.values();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] && !y[i]) return false;
    return true;
}

}  // namespace fgx::testing
