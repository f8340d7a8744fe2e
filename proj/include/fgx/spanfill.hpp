#pragma once

#include <cstdint>
#include <vector>

#include "fgx/exec.hpp"
#include "fgx/grid.hpp"
#include "fgx/raster.hpp"

namespace fgx {

enum class Axis { row, column };

// Boundary pixels replaced by their 1-based row index (Axis::row) or 1-based
// column index (Axis::column); 0 marks background. One-based storage keeps a
// boundary pixel on row or column 0 distinguishable from background.
struct IndexMap {
    Axis axis;
    Grid<std::int32_t> values;
};

IndexMap index_map(const EdgeMap& edges, Axis axis);

// Largest entry of each column (k2 for the column pass); 0 for an empty column.
std::vector<std::int32_t> column_max(const IndexMap& index);
// Largest entry of each row; the row-pass counterpart of column_max.
std::vector<std::int32_t> row_max(const IndexMap& index);

// Axis::column fills each column from its first to its last boundary row.
// Axis::row fills each row from its first to its last boundary column.
// Gaps between the two endpoints are filled unconditionally.
FillMask span_fill(const EdgeMap& edges, Axis axis, Exec exec = Exec::parallel);

namespace reference {

// Serial span fill that walks the index map and its per-line maxima the
// long way. Kept as the baseline for tests and benchmarks.
FillMask span_fill(const EdgeMap& edges, Axis axis);

}  // namespace reference

FillMask intersect(const FillMask& a, const FillMask& b);

// Pixels under the mask keep their colour; everything else becomes `background`.
ColorImage extract_foreground(const ColorImage& img, const FillMask& mask, Rgb background = kWhite);

}  // namespace fgx
