#include "edgechroma/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <vector>

#include <jpeglib.h>
#include <png.h>

#include "edgechroma/error.hpp"

namespace edgechroma {
namespace {

struct FileHandle {
    FILE* fp = nullptr;

    FileHandle(const std::string& path, const char* mode)
        : fp(std::fopen(path.c_str(), mode)) {}
    ~FileHandle() {
        if (fp) {
            std::fclose(fp);
        }
    }
    FileHandle(const FileHandle&) = delete;
    FileHandle& operator=(const FileHandle&) = delete;
};

RgbImage decode_png(FILE* fp, const std::string& path) {
    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) {
        throw Error("cannot decode '" + path + "': libpng init failed");
    }
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error("cannot decode '" + path + "': libpng init failed");
    }

    std::vector<std::uint8_t> pixels;
    std::vector<png_bytep> rows;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("cannot decode '" + path + "': invalid or corrupt PNG");
    }

    png_init_io(png, fp);
    png_read_info(png, info);

    // Normalize everything to 8-bit RGB.
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    png_set_scale_16(png);
    png_set_gray_to_rgb(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(png);
    }
    png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    if (width < 1 || height < 1 || png_get_channels(png, info) != 3 ||
        png_get_bit_depth(png, info) != 8) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("cannot decode '" + path + "': unsupported PNG layout");
    }

    pixels.resize(static_cast<std::size_t>(width) * height * 3);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        rows[y] = pixels.data() + static_cast<std::size_t>(y) * width * 3;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    return RgbImage(static_cast<int>(width), static_cast<int>(height),
                    std::move(pixels));
}

struct JpegErrorState {
    jpeg_error_mgr mgr;
    std::jmp_buf jump;
};

void jpeg_error_exit_override(j_common_ptr cinfo) {
    JpegErrorState* state = reinterpret_cast<JpegErrorState*>(cinfo->err);
    longjmp(state->jump, 1);
}

RgbImage decode_jpeg(FILE* fp, const std::string& path) {
    jpeg_decompress_struct cinfo;
    JpegErrorState err;
    std::vector<std::uint8_t> pixels;

    cinfo.err = jpeg_std_error(&err.mgr);
    err.mgr.error_exit = jpeg_error_exit_override;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw Error("cannot decode '" + path + "': invalid or corrupt JPEG");
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fp);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const std::size_t width = cinfo.output_width;
    const std::size_t height = cinfo.output_height;
    if (width < 1 || height < 1 || cinfo.output_components != 3) {
        jpeg_destroy_decompress(&cinfo);
        throw Error("cannot decode '" + path + "': unsupported JPEG layout");
    }

    pixels.resize(width * height * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = pixels.data() + 3 * width * cinfo.output_scanline;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);

    return RgbImage(static_cast<int>(width), static_cast<int>(height),
                    std::move(pixels));
}

void encode_png(const std::uint8_t* data, int width, int height, int color_type,
                const std::string& path) {
    FileHandle file(path, "wb");
    if (!file.fp) {
        throw Error("cannot open '" + path + "' for writing");
    }

    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) {
        throw Error("cannot encode '" + path + "': libpng init failed");
    }
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error("cannot encode '" + path + "': libpng init failed");
    }

    const int channels = color_type == PNG_COLOR_TYPE_RGB ? 3 : 1;
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) {
        rows[y] = const_cast<png_bytep>(data) +
                  static_cast<std::size_t>(y) * width * channels;
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error("failed writing PNG '" + path + "'");
    }

    png_init_io(png, file.fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), 8, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);

    if (std::fflush(file.fp) != 0) {
        throw Error("failed writing PNG '" + path + "'");
    }
}

}  // namespace

RgbImage load_image(const std::string& path) {
    FileHandle file(path, "rb");
    if (!file.fp) {
        throw Error("cannot open '" + path + "'");
    }

    std::uint8_t magic[8] = {};
    const std::size_t got = std::fread(magic, 1, sizeof magic, file.fp);
    std::rewind(file.fp);

    static const std::uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) {
        return decode_png(file.fp, path);
    }
    if (got >= 3 && magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF) {
        return decode_jpeg(file.fp, path);
    }
    throw Error("cannot decode '" + path + "': not a PNG or JPEG file");
}

void save_png(const RgbImage& image, const std::string& path) {
    encode_png(image.data(), image.width(), image.height(), PNG_COLOR_TYPE_RGB,
               path);
}

void save_mask_png(const EdgeMask& mask, const std::string& path) {
    std::vector<std::uint8_t> gray(mask.size());
    const std::vector<std::uint8_t>& bits = mask.bits();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        gray[i] = bits[i] ? 255 : 0;
    }
    encode_png(gray.data(), mask.width(), mask.height(), PNG_COLOR_TYPE_GRAY,
               path);
}

}  // namespace edgechroma
