#pragma once

#include "fgx/canny.hpp"
#include "fgx/raster.hpp"
#include "fgx/spanfill.hpp"

namespace fgx {

struct Extraction {
    ColorImage foreground;
    FillMask mask;
    EdgeMap edges;
    FillMask column_fill;
    FillMask row_fill;
};

// grayscale -> canny -> column and row span fills -> intersection -> extraction.
Extraction extract_pipeline(const ColorImage& img, const CannyParams& params = {}, Rgb background = kWhite,
                            Exec exec = Exec::parallel);

}  // namespace fgx
