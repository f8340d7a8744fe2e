#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgx/grid.hpp"

namespace fgx {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};

using ColorImage = Grid<Rgb>;

// Intensities in [0, 1]. Construction rejects anything outside that range.
class GrayImage : public Grid<double> {
public:
    GrayImage(int height, int width, double fill = 0.0);
    GrayImage(int height, int width, std::vector<double> data);

    // Quantized [0, 255] view for output.
    std::vector<std::uint8_t> to_bytes() const;
};

// Binary raster. Values are exactly 0 or 1; the tag keeps edge maps and
// fill masks from being mixed up at call sites.
template <typename Tag>
class BitMap : public Grid<std::uint8_t> {
public:
    BitMap(int height, int width) : Grid<std::uint8_t>(height, width, 0) {}
    BitMap(int height, int width, std::vector<std::uint8_t> bits)
        : Grid<std::uint8_t>(height, width, std::move(bits)) {
        for (auto v : values())
            if (v > 1) throw std::invalid_argument("binary map holds a value other than 0 or 1");
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto v : values()) n += v;
        return n;
    }
};

using EdgeMap = BitMap<struct EdgeTag>;
using FillMask = BitMap<struct FillTag>;

template <typename To, typename From>
To retag(const From& m) {
    return To(m.height(), m.width(), std::vector<std::uint8_t>(m.values().begin(), m.values().end()));
}

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// round(0.299 R + 0.587 G + 0.114 B) / 255.
GrayImage to_grayscale(const ColorImage& img);

// PNG or JPEG, sniffed from the file signature. Alpha is composited over
// white and gray files expand to R = G = B.
ColorImage load_image(const std::filesystem::path& path);

// 8-bit RGB PNG. A non-empty alpha span (one byte per pixel) writes RGBA.
void save_image(const ColorImage& img, const std::filesystem::path& path,
                std::span<const std::uint8_t> alpha = {});

// Black/white PNG of a binary map (1 -> white).
template <typename Tag>
void save_bitmap(const BitMap<Tag>& m, const std::filesystem::path& path) {
    ColorImage img(m.height(), m.width());
    auto src = m.values();
    auto dst = img.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? kWhite : kBlack;
    save_image(img, path);
}

}  // namespace fgx
