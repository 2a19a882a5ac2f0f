#include "ais/imaging/resample.hpp"

#include <algorithm>
#include <cmath>

#include "ais/common/error.hpp"

namespace ais::imaging {

namespace {

RasterImage as_gray_if_binary(const RasterImage& img) {
  if (img.format() != PixelFormat::binary) return img;
  return RasterImage(img.width(), img.height(), PixelFormat::gray8,
                     std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()));
}

RasterImage convert_to(const RasterImage& img, PixelFormat format) {
  if (img.format() == format) return img;
  switch (format) {
    case PixelFormat::rgb8:
      return to_rgb(img);
    case PixelFormat::gray8:
      return img.format() == PixelFormat::rgb8 ? to_grayscale(img) : as_gray_if_binary(img);
    case PixelFormat::binary:
      return BinaryImage::from_raster(img).to_raster();
  }
  return img;
}

}  // namespace

RasterImage resize_bilinear(const RasterImage& input, int width, int height) {
  if (width <= 0 || height <= 0) throw InvalidInput("resize target must be positive");
  if (input.empty()) throw InvalidInput("cannot resize an empty image");
  const RasterImage src = as_gray_if_binary(input);
  if (src.width() == width && src.height() == height) return src;

  const int c = src.channels();
  RasterImage out(width, height, src.format());
  const double sx = static_cast<double>(src.width()) / width;
  const double sy = static_cast<double>(src.height()) / height;
  for (int y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, src.height() - 1.0);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, src.height() - 1);
    const double wy = fy - y0;
    for (int x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, src.width() - 1.0);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, src.width() - 1);
      const double wx = fx - x0;
      for (int k = 0; k < c; ++k) {
        const double top = src.at(x0, y0, k) * (1.0 - wx) + src.at(x1, y0, k) * wx;
        const double bottom = src.at(x0, y1, k) * (1.0 - wx) + src.at(x1, y1, k) * wx;
        const double v = top * (1.0 - wy) + bottom * wy;
        out.at(x, y, k) = static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
      }
    }
  }
  return out;
}

RasterImage letterbox(const RasterImage& input, int side, Rgb pad) {
  if (side <= 0) throw InvalidInput("letterbox side must be positive");
  const RasterImage img = as_gray_if_binary(input);
  if (img.width() == side && img.height() == side) return img;

  const int longest = std::max(img.width(), img.height());
  const int w = std::max(1, static_cast<int>(std::lround(
                                 static_cast<double>(img.width()) * side / longest)));
  const int h = std::max(1, static_cast<int>(std::lround(
                                 static_cast<double>(img.height()) * side / longest)));
  const RasterImage scaled = resize_bilinear(img, w, h);

  RasterImage canvas(side, side, img.format());
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) canvas.set_rgb(x, y, pad);
  }
  paste(canvas, scaled, (side - w) / 2, (side - h) / 2);
  return canvas;
}

RasterImage pad_to_square(const RasterImage& input, Rgb pad) {
  const RasterImage img = as_gray_if_binary(input);
  const int side = std::max(img.width(), img.height());
  if (img.width() == img.height()) return img;
  RasterImage canvas(side, side, img.format());
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) canvas.set_rgb(x, y, pad);
  }
  paste(canvas, img, (side - img.width()) / 2, (side - img.height()) / 2);
  return canvas;
}

RasterImage crop(const RasterImage& img, int x0, int y0, int width, int height) {
  if (x0 < 0 || y0 < 0 || width < 0 || height < 0 || x0 + width > img.width() ||
      y0 + height > img.height()) {
    throw InvalidInput("crop rectangle outside image");
  }
  const int c = img.channels();
  std::vector<std::uint8_t> samples(static_cast<std::size_t>(width) * height * c);
  for (int y = 0; y < height; ++y) {
    const auto* row = &img.samples()[(static_cast<std::size_t>(y0 + y) * img.width() + x0) * c];
    std::copy(row, row + static_cast<std::size_t>(width) * c,
              samples.begin() + static_cast<std::ptrdiff_t>(y) * width * c);
  }
  return RasterImage(width, height, img.format(), std::move(samples));
}

void paste(RasterImage& dst, const RasterImage& src_any, int x0, int y0) {
  if (x0 < 0 || y0 < 0 || x0 + src_any.width() > dst.width() ||
      y0 + src_any.height() > dst.height()) {
    throw InvalidInput("paste rectangle outside canvas");
  }
  const RasterImage src = convert_to(src_any, dst.format());
  const int c = dst.channels();
  const std::size_t run = static_cast<std::size_t>(src.width()) * c;
  for (int y = 0; y < src.height(); ++y) {
    const auto* from = &src.samples()[static_cast<std::size_t>(y) * run];
    auto* to = &dst.samples()[(static_cast<std::size_t>(y0 + y) * dst.width() + x0) * c];
    std::copy(from, from + run, to);
  }
}

BinaryImage downsample_any(const BinaryImage& img, int factor) {
  if (factor <= 0) throw InvalidInput("downsample factor must be positive");
  const int w = (img.width() + factor - 1) / factor;
  const int h = (img.height() + factor - 1) / factor;
  BinaryImage out(w, h);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (img.get(x, y)) out.set(x / factor, y / factor);
    }
  }
  return out;
}

}  // namespace ais::imaging
