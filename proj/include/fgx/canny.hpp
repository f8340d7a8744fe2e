#pragma once

#include <vector>

#include "fgx/exec.hpp"
#include "fgx/grid.hpp"
#include "fgx/raster.hpp"

namespace fgx {

// Thresholds are fractions of the strongest thinned gradient magnitude.
struct CannyParams {
    double low_threshold = 0.04;
    double high_threshold = 0.10;
    double sigma = 1.5;

    // Throws std::invalid_argument unless 0 < low < high < 1 and sigma > 0.
    void validate() const;
};

struct GradientField {
    Grid<double> gx;
    Grid<double> gy;
    Grid<double> magnitude;
    Grid<double> direction;  // atan2(gy, gx), radians
};

// Direction of the gradient folded onto one of four line orientations.
enum class Sector : int { horizontal = 0, diagonal45 = 1, vertical = 2, diagonal135 = 3 };

// Symmetric, unit-sum kernel of radius ceil(3 sigma).
std::vector<double> gaussian_kernel(double sigma);

// Separable blur with clamp-to-edge borders. The horizontal-vertical and
// vertical-horizontal orders are averaged so the result commutes exactly
// with quarter-turn rotations and transposition.
GrayImage gaussian_blur(const GrayImage& img, double sigma, Exec exec = Exec::parallel);

// 3x3 Sobel responses, clamp-to-edge borders.
GradientField gradient(const Grid<double>& img, Exec exec = Exec::parallel);

Sector quantize_direction(double gx, double gy) noexcept;

// Keeps a magnitude only if it is >= both neighbours along its sector.
Grid<double> non_max_suppression(const GradientField& field, Exec exec = Exec::parallel);

// Normalizes by the global maximum, seeds at >= high and grows 8-connected
// through pixels >= low. A zero maximum yields an empty map.
EdgeMap hysteresis(const Grid<double>& thinned, const CannyParams& params);

EdgeMap canny(const GrayImage& img, const CannyParams& params = {}, Exec exec = Exec::parallel);

}  // namespace fgx
