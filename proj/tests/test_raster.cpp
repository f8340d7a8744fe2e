#include <doctest.h>

#include <filesystem>
#include <random>

#include "fgx/raster.hpp"

using namespace fgx;
namespace fs = std::filesystem;

namespace {

fs::path data(const char* name) { return fs::path(FGX_TEST_DATA) / name; }

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "fgx_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("grid rejects bad shapes") {
    CHECK_THROWS_AS(Grid<int>(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Grid<int>(2, 2, std::vector<int>(3)), std::invalid_argument);
    CHECK_THROWS_AS(GrayImage(1, 2, std::vector<double>{0.5, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeMap(1, 2, std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
}

TEST_CASE("to_grayscale uses BT.601 weights") {
    ColorImage img(1, 3);
    img(0, 0) = kWhite;
    img(0, 1) = kBlack;
    img(0, 2) = Rgb{255, 0, 0};
    const GrayImage g = to_grayscale(img);
    CHECK(g(0, 0) == 1.0);
    CHECK(g(0, 1) == 0.0);
    CHECK(g.to_bytes()[2] == 76);
    CHECK(g(0, 2) == doctest::Approx(76.0 / 255.0).epsilon(1e-15));
}

TEST_CASE("to_grayscale is the identity on neutral pixels") {
    ColorImage img(16, 16);
    for (int v = 0; v < 256; ++v) {
        const auto b = static_cast<std::uint8_t>(v);
        img(v / 16, v % 16) = Rgb{b, b, b};
    }
    const auto bytes = to_grayscale(img).to_bytes();
    for (int v = 0; v < 256; ++v) CHECK(bytes[static_cast<std::size_t>(v)] == v);
}

TEST_CASE("load_image decodes a PNG written by another encoder") {
    const ColorImage img = load_image(data("rgb_2x2.png"));
    REQUIRE(img.height() == 2);
    REQUIRE(img.width() == 2);
    CHECK(img(0, 0) == Rgb{255, 0, 0});
    CHECK(img(0, 1) == Rgb{0, 255, 0});
    CHECK(img(1, 0) == Rgb{0, 0, 255});
    CHECK(img(1, 1) == Rgb{10, 20, 30});
}

TEST_CASE("gray PNG expands and alpha composites over white") {
    const ColorImage gray = load_image(data("gray_3x1.png"));
    CHECK(gray(0, 1) == Rgb{128, 128, 128});
    CHECK(gray(0, 2) == kWhite);

    const ColorImage rgba = load_image(data("rgba_2x1.png"));
    CHECK(rgba(0, 0) == kWhite);
    CHECK(rgba(0, 1) == Rgb{100, 150, 200});
}

TEST_CASE("load_image decodes JPEG") {
    const ColorImage img = load_image(data("flat_16x16.jpg"));
    REQUIRE(img.height() == 16);
    for (const Rgb& p : img.values()) {
        CHECK(std::abs(p.r - 200) <= 2);
        CHECK(std::abs(p.g - 40) <= 2);
        CHECK(std::abs(p.b - 90) <= 2);
    }
}

TEST_CASE("load_image reports I/O and format failures distinctly") {
    CHECK_THROWS_AS(load_image(data("does_not_exist.png")), IoError);
    CHECK_THROWS_AS(load_image(data("truncated.png")), FormatError);
    CHECK_THROWS_AS(load_image(data("truncated.jpg")), FormatError);
    CHECK_THROWS_AS(load_image(data("not_an_image.png")), FormatError);
}

TEST_CASE("PNG save/load round-trips exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto [h, w] : {std::pair{1, 1}, std::pair{3, 7}, std::pair{64, 33}}) {
        ColorImage img(h, w);
        for (auto& p : img.values())
            p = Rgb{static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                    static_cast<std::uint8_t>(byte(rng))};
        const auto path = scratch("roundtrip.png");
        save_image(img, path);
        CHECK(load_image(path) == img);
    }
}

TEST_CASE("save_image to an unwritable location fails with IoError") {
    ColorImage img(2, 2);
    CHECK_THROWS_AS(save_image(img, "/nonexistent-dir/fgx/out.png"), IoError);
}
