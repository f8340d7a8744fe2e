#include "fgx/spanfill.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgx {

namespace {

constexpr int kColumnBlock = 64;

std::vector<std::int32_t> line_max(const IndexMap& index, bool per_column) {
    const auto& v = index.values;
    std::vector<std::int32_t> out(static_cast<std::size_t>(per_column ? v.width() : v.height()), 0);
    for (int r = 0; r < v.height(); ++r)
        for (int c = 0; c < v.width(); ++c) {
            auto& m = out[static_cast<std::size_t>(per_column ? c : r)];
            m = std::max(m, v(r, c));
        }
    return out;
}

FillMask fill_columns(const EdgeMap& edges, Exec exec) {
    const int h = edges.height();
    const int w = edges.width();
    std::vector<int> first(static_cast<std::size_t>(w), h);
    std::vector<int> last(static_cast<std::size_t>(w), -1);

    const int blocks = (w + kColumnBlock - 1) / kColumnBlock;
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int b = 0; b < blocks; ++b) {
        const int c0 = b * kColumnBlock;
        const int c1 = std::min(w, c0 + kColumnBlock);
        for (int r = 0; r < h; ++r) {
            const auto bits = edges.row(r);
            for (int c = c0; c < c1; ++c) {
                if (!bits[c]) continue;
                if (first[c] == h) first[c] = r;
                last[c] = r;
            }
        }
    }

    FillMask mask(h, w);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int r = 0; r < h; ++r) {
        auto out = mask.row(r);
        for (int c = 0; c < w; ++c) out[c] = (first[c] <= r && r <= last[c]) ? 1 : 0;
    }
    return mask;
}

FillMask fill_rows(const EdgeMap& edges, Exec exec) {
    const int h = edges.height();
    const int w = edges.width();
    FillMask mask(h, w);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int r = 0; r < h; ++r) {
        const auto bits = edges.row(r);
        int first = 0;
        while (first < w && !bits[first]) ++first;
        if (first == w) continue;
        int last = w - 1;
        while (!bits[last]) --last;
        auto out = mask.row(r);
        std::fill(out.begin() + first, out.begin() + last + 1, std::uint8_t{1});
    }
    return mask;
}

}  // namespace

IndexMap index_map(const EdgeMap& edges, Axis axis) {
    IndexMap index{axis, Grid<std::int32_t>(edges.height(), edges.width(), 0)};
    for (int r = 0; r < edges.height(); ++r)
        for (int c = 0; c < edges.width(); ++c)
            if (edges(r, c)) index.values(r, c) = (axis == Axis::row ? r : c) + 1;
    return index;
}

std::vector<std::int32_t> column_max(const IndexMap& index) { return line_max(index, true); }

std::vector<std::int32_t> row_max(const IndexMap& index) { return line_max(index, false); }

FillMask span_fill(const EdgeMap& edges, Axis axis, Exec exec) {
    return axis == Axis::column ? fill_columns(edges, exec) : fill_rows(edges, exec);
}

namespace reference {

FillMask span_fill(const EdgeMap& edges, Axis axis) {
    const int h = edges.height();
    const int w = edges.width();
    FillMask mask(h, w);

    if (axis == Axis::column) {
        const IndexMap rows = index_map(edges, Axis::row);
        const auto k2 = column_max(rows);
        for (int c = 0; c < w; ++c) {
            for (int r = 0; r < h; ++r) {
                const std::int32_t k3 = rows.values(r, c);
                if (k3 > 0) {
                    for (int rr = k3; rr <= k2[c]; ++rr) mask(rr - 1, c) = 1;
                    break;
                }
            }
        }
    } else {
        const IndexMap cols = index_map(edges, Axis::column);
        const auto k2 = row_max(cols);
        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < w; ++c) {
                const std::int32_t k3 = cols.values(r, c);
                if (k3 > 0) {
                    for (int cc = k3; cc <= k2[r]; ++cc) mask(r, cc - 1) = 1;
                    break;
                }
            }
        }
    }
    return mask;
}

}  // namespace reference

FillMask intersect(const FillMask& a, const FillMask& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("intersect: mask dimensions differ");
    FillMask out(a.height(), a.width());
    auto x = a.values();
    auto y = b.values();
    auto z = out.values();
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] & y[i];
    return out;
}

ColorImage extract_foreground(const ColorImage& img, const FillMask& mask, Rgb background) {
    if (img.height() != mask.height() || img.width() != mask.width())
        throw std::invalid_argument("extract_foreground: mask dimensions differ from image");
    ColorImage out(img.height(), img.width(), background);
    auto src = img.values();
    auto bits = mask.values();
    auto dst = out.values();
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (bits[i]) dst[i] = src[i];
    return out;
}

}  // namespace fgx
