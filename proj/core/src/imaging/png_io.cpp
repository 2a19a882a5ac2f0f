#include "ais/imaging/png_io.hpp"

#include <png.h>

#include <cstring>
#include <string>

#include "ais/common/error.hpp"
#include "ais/common/files.hpp"

namespace ais::imaging {

namespace {

[[noreturn]] void on_png_error(png_structp png, png_const_charp message) {
  auto* what = static_cast<std::string*>(png_get_error_ptr(png));
  if (what) *what = message;
  png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

struct ReadCursor {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
};

void read_from_span(png_structp png, png_bytep out, png_size_t length) {
  auto* cursor = static_cast<ReadCursor*>(png_get_io_ptr(png));
  if (cursor->offset + length > cursor->bytes.size()) {
    png_error(png, "truncated PNG stream");
  }
  std::memcpy(out, cursor->bytes.data() + cursor->offset, length);
  cursor->offset += length;
}

void write_to_vector(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void flush_noop(png_structp) {}

}  // namespace

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    throw InvalidInput("not a PNG stream");
  }
  std::string error;
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, on_png_error, on_png_warning);
  png_infop info = png_create_info_struct(png);
  ReadCursor cursor{bytes, 0};

  // Declared before setjmp so longjmp does not skip their construction.
  std::vector<std::uint8_t> buffer;
  std::vector<png_bytep> rows;
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int channels = 0;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw InvalidInput("PNG decode failed: " + error);
  }

  png_set_read_fn(png, &cursor, read_from_span);
  png_read_info(png, info);

  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_color_16 white{0, 255, 255, 255, 255};
  png_set_background(png, &white, PNG_BACKGROUND_GAMMA_SCREEN, 0, 1.0);
  png_read_update_info(png, info);

  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  channels = png_get_channels(png, info);
  if (channels != 1 && channels != 3) {
    png_error(png, "unsupported channel layout after transforms");
  }
  const std::size_t stride = png_get_rowbytes(png, info);
  buffer.resize(stride * height);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = buffer.data() + y * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  return RasterImage(static_cast<int>(width), static_cast<int>(height),
                     channels == 3 ? PixelFormat::rgb8 : PixelFormat::gray8, std::move(buffer));
}

std::vector<std::uint8_t> encode_png(const RasterImage& img) {
  if (img.empty()) throw InvalidInput("cannot encode an empty image");
  std::string error;
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, on_png_error, on_png_warning);
  png_infop info = png_create_info_struct(png);
  std::vector<std::uint8_t> out;
  std::vector<png_bytep> rows;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw InvalidInput("PNG encode failed: " + error);
  }

  png_set_write_fn(png, &out, write_to_vector, flush_noop);
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
               static_cast<png_uint_32>(img.height()), 8,
               img.format() == PixelFormat::rgb8 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const std::size_t stride = static_cast<std::size_t>(img.width()) * img.channels();
  rows.resize(static_cast<std::size_t>(img.height()));
  auto* base = const_cast<std::uint8_t*>(img.samples().data());
  for (int y = 0; y < img.height(); ++y) rows[static_cast<std::size_t>(y)] = base + y * stride;
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

RasterImage read_png(const std::filesystem::path& path) {
  try {
    return decode_png(read_file(path));
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_png(const std::filesystem::path& path, const RasterImage& img) {
  write_atomic(path, encode_png(img));
}

}  // namespace ais::imaging
