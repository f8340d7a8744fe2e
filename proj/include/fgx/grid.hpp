#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgx {

// Row-major H x W container shared by every raster type in the library.
template <typename T>
class Grid {
public:
    using value_type = T;

    Grid(int height, int width, T fill = T{})
        : height_(checked(height, "height")), width_(checked(width, "width")),
          data_(static_cast<std::size_t>(height) * static_cast<std::size_t>(width), fill) {}

    Grid(int height, int width, std::vector<T> data)
        : height_(checked(height, "height")), width_(checked(width, "width")), data_(std::move(data)) {
        if (data_.size() != static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_)) {
            throw std::invalid_argument("grid data length " + std::to_string(data_.size()) +
                                        " does not match " + std::to_string(height_) + "x" +
                                        std::to_string(width_));
        }
    }

    int height() const noexcept { return height_; }
    int width() const noexcept { return width_; }
    std::size_t size() const noexcept { return data_.size(); }

    T& operator()(int r, int c) noexcept { return data_[index(r, c)]; }
    const T& operator()(int r, int c) const noexcept { return data_[index(r, c)]; }

    std::span<T> row(int r) noexcept { return {data_.data() + index(r, 0), static_cast<std::size_t>(width_)}; }
    std::span<const T> row(int r) const noexcept {
        return {data_.data() + index(r, 0), static_cast<std::size_t>(width_)};
    }

    std::span<T> values() & noexcept { return data_; }
    std::span<const T> values() const& noexcept { return data_; }
    // Spans into a temporary would dangle.
    void values() && = delete;

    bool same_shape(const Grid& other) const noexcept {
        return height_ == other.height_ && width_ == other.width_;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    static int checked(int n, const char* what) {
        if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
        return n;
    }
    std::size_t index(int r, int c) const noexcept {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c);
    }

    int height_;
    int width_;
    std::vector<T> data_;
};

template <typename T>
Grid<T> transpose(const Grid<T>& g) {
    Grid<T> out(g.width(), g.height());
    for (int r = 0; r < g.height(); ++r)
        for (int c = 0; c < g.width(); ++c) out(c, r) = g(r, c);
    return out;
}

// Quarter turn counter-clockwise: out(W-1-c, r) = in(r, c).
template <typename T>
Grid<T> rotate90(const Grid<T>& g) {
    Grid<T> out(g.width(), g.height());
    for (int r = 0; r < g.height(); ++r)
        for (int c = 0; c < g.width(); ++c) out(g.width() - 1 - c, r) = g(r, c);
    return out;
}

inline int clamp_index(int i, int n) noexcept { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

}  // namespace fgx
