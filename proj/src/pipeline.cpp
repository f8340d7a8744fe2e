#include "fgx/pipeline.hpp"

namespace fgx {

Extraction extract_pipeline(const ColorImage& img, const CannyParams& params, Rgb background, Exec exec) {
    const GrayImage gray = to_grayscale(img);
    EdgeMap edges = canny(gray, params, exec);
    FillMask column_fill = span_fill(edges, Axis::column, exec);
    FillMask row_fill = span_fill(edges, Axis::row, exec);
    FillMask mask = intersect(column_fill, row_fill);
    ColorImage foreground = extract_foreground(img, mask, background);
    return {std::move(foreground), std::move(mask), std::move(edges), std::move(column_fill), std::move(row_fill)};
}

}  // namespace fgx
