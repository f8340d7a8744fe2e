#include "fgx/raster.hpp"

#include <algorithm>
#include <csetjmp>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>

#include <jpeglib.h>
#include <png.h>

namespace fgx {

static_assert(sizeof(Rgb) == 3, "Rgb must be tightly packed for codec buffers");

namespace {

void check_unit_range(std::span<const double> v) {
    for (double x : v)
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("gray intensity outside [0, 1]");
}

std::vector<unsigned char> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

bool is_png(const std::vector<unsigned char>& b) {
    return b.size() >= 8 && png_sig_cmp(b.data(), 0, 8) == 0;
}

bool is_jpeg(const std::vector<unsigned char>& b) {
    return b.size() >= 3 && b[0] == 0xFF && b[1] == 0xD8 && b[2] == 0xFF;
}

ColorImage decode_png(const std::vector<unsigned char>& bytes, const std::string& name) {
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
        throw FormatError(name + ": " + image.message);
    image.format = PNG_FORMAT_RGB;
    if (image.height < 1 || image.width < 1 || image.height > 1u << 15 || image.width > 1u << 15) {
        png_image_free(&image);
        throw FormatError(name + ": unsupported dimensions");
    }
    ColorImage img(static_cast<int>(image.height), static_cast<int>(image.width));
    png_color background{255, 255, 255};
    if (!png_image_finish_read(&image, &background, img.values().data(), 0, nullptr))
        throw FormatError(name + ": " + image.message);
    return img;
}

struct JpegErrorManager {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_fail(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    std::longjmp(err->jump, 1);
}

// Warnings (corrupt or truncated data) are fatal: libjpeg would otherwise
// pad the missing scanlines with gray.
void jpeg_message(j_common_ptr cinfo, int level) {
    if (level < 0) jpeg_fail(cinfo);
}

ColorImage decode_jpeg(const std::vector<unsigned char>& bytes, const std::string& name) {
    jpeg_decompress_struct cinfo;
    JpegErrorManager err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_fail;
    err.base.emit_message = jpeg_message;
    err.message[0] = '\0';

    std::vector<Rgb> pixels;
    int height = 0;
    int width = 0;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw FormatError(name + ": " + err.message);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);
    height = static_cast<int>(cinfo.output_height);
    width = static_cast<int>(cinfo.output_width);
    pixels.resize(static_cast<std::size_t>(height) * static_cast<std::size_t>(width));
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = reinterpret_cast<JSAMPROW>(pixels.data() + static_cast<std::size_t>(cinfo.output_scanline) * width);
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return ColorImage(height, width, std::move(pixels));
}

}  // namespace

GrayImage::GrayImage(int height, int width, double fill) : Grid<double>(height, width, fill) {
    check_unit_range(values());
}

GrayImage::GrayImage(int height, int width, std::vector<double> data)
    : Grid<double>(height, width, std::move(data)) {
    check_unit_range(values());
}

std::vector<std::uint8_t> GrayImage::to_bytes() const {
    std::vector<std::uint8_t> out(size());
    auto v = values();
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>(std::lround(v[i] * 255.0));
    return out;
}

GrayImage to_grayscale(const ColorImage& img) {
    std::vector<double> out(img.size());
    auto px = img.values();
    for (std::size_t i = 0; i < px.size(); ++i) {
        const double y = 0.299 * px[i].r + 0.587 * px[i].g + 0.114 * px[i].b;
        out[i] = std::min(255.0, std::round(y)) / 255.0;
    }
    return GrayImage(img.height(), img.width(), std::move(out));
}

ColorImage load_image(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    const std::string name = path.string();
    if (is_png(bytes)) return decode_png(bytes, name);
    if (is_jpeg(bytes)) return decode_jpeg(bytes, name);
    throw FormatError(name + ": not a PNG or JPEG file");
}

void save_image(const ColorImage& img, const std::filesystem::path& path, std::span<const std::uint8_t> alpha) {
    if (!alpha.empty() && alpha.size() != img.size())
        throw std::invalid_argument("alpha plane size does not match image");

    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());

    std::vector<unsigned char> raw;
    const void* buffer = img.values().data();
    if (alpha.empty()) {
        image.format = PNG_FORMAT_RGB;
    } else {
        image.format = PNG_FORMAT_RGBA;
        raw.resize(img.size() * 4);
        auto px = img.values();
        for (std::size_t i = 0; i < px.size(); ++i) {
            raw[4 * i] = px[i].r;
            raw[4 * i + 1] = px[i].g;
            raw[4 * i + 2] = px[i].b;
            raw[4 * i + 3] = alpha[i];
        }
        buffer = raw.data();
    }

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&image, nullptr, &size, 0, buffer, 0, nullptr))
        throw IoError(std::string("PNG encode failed: ") + image.message);
    std::vector<unsigned char> encoded(size);
    if (!png_image_write_to_memory(&image, encoded.data(), &size, 0, buffer, 0, nullptr))
        throw IoError(std::string("PNG encode failed: ") + image.message);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(encoded.data()), static_cast<std::streamsize>(size));
    out.close();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace fgx
