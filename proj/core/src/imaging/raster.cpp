#include "ais/imaging/raster.hpp"

#include <algorithm>
#include <string>

#include "ais/common/error.hpp"

namespace ais::imaging {

std::string_view to_string(PixelFormat f) {
  switch (f) {
    case PixelFormat::rgb8: return "rgb8";
    case PixelFormat::gray8: return "gray8";
    case PixelFormat::binary: return "binary";
  }
  return "?";
}

namespace {

void check_dims(int width, int height) {
  if (width < 0 || height < 0) {
    throw InvalidInput("negative image dimensions");
  }
}

bool is_binary_sample(std::uint8_t v) {
  return v == kBinaryForeground || v == kBinaryBackground;
}

}  // namespace

RasterImage::RasterImage(int width, int height, PixelFormat format, std::uint8_t fill)
    : width_(width), height_(height), format_(format) {
  check_dims(width, height);
  if (format == PixelFormat::binary && !is_binary_sample(fill)) {
    throw InvalidInput("binary image fill must be 0 or 255");
  }
  samples_.assign(static_cast<std::size_t>(width) * height * samples_per_pixel(format), fill);
}

RasterImage::RasterImage(int width, int height, PixelFormat format,
                         std::vector<std::uint8_t> samples)
    : width_(width), height_(height), format_(format), samples_(std::move(samples)) {
  check_dims(width, height);
  const auto expected = static_cast<std::size_t>(width) * height * samples_per_pixel(format);
  if (samples_.size() != expected) {
    throw InvalidInput("sample buffer holds " + std::to_string(samples_.size()) +
                       " bytes, expected " + std::to_string(expected));
  }
  if (format == PixelFormat::binary &&
      !std::all_of(samples_.begin(), samples_.end(), is_binary_sample)) {
    throw InvalidInput("binary image samples must be 0 or 255");
  }
}

RasterImage RasterImage::filled(int width, int height, Rgb color) {
  RasterImage img(width, height, PixelFormat::rgb8);
  auto s = img.samples();
  for (std::size_t i = 0; i < s.size(); i += 3) {
    s[i] = color.r;
    s[i + 1] = color.g;
    s[i + 2] = color.b;
  }
  return img;
}

Rgb RasterImage::rgb(int x, int y) const {
  if (format_ == PixelFormat::rgb8) {
    return {at(x, y, 0), at(x, y, 1), at(x, y, 2)};
  }
  const auto v = at(x, y);
  return {v, v, v};
}

void RasterImage::set_rgb(int x, int y, Rgb color) {
  if (format_ == PixelFormat::rgb8) {
    at(x, y, 0) = color.r;
    at(x, y, 1) = color.g;
    at(x, y, 2) = color.b;
  } else if (format_ == PixelFormat::gray8) {
    at(x, y) = luma601(color);
  } else {
    at(x, y) = luma601(color) < 128 ? kBinaryForeground : kBinaryBackground;
  }
}

RasterImage to_grayscale(const RasterImage& img) {
  switch (img.format()) {
    case PixelFormat::gray8:
      return img;
    case PixelFormat::binary:
      throw InvalidInput("to_grayscale: binary input must be rasterized explicitly");
    case PixelFormat::rgb8:
      break;
  }
  RasterImage out(img.width(), img.height(), PixelFormat::gray8);
  const auto src = img.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = luma601({src[3 * i], src[3 * i + 1], src[3 * i + 2]});
  }
  return out;
}

RasterImage to_rgb(const RasterImage& img) {
  if (img.format() == PixelFormat::rgb8) return img;
  RasterImage out(img.width(), img.height(), PixelFormat::rgb8);
  const auto src = img.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[3 * i] = dst[3 * i + 1] = dst[3 * i + 2] = src[i];
  }
  return out;
}

RasterImage invert(const RasterImage& img) {
  RasterImage out = img;
  for (auto& v : out.samples()) v = static_cast<std::uint8_t>(255 - v);
  return out;
}

}  // namespace ais::imaging
