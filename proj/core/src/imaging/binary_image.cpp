#include "ais/imaging/binary_image.hpp"

#include <algorithm>
#include <numeric>

#include "ais/common/error.hpp"

namespace ais::imaging {

BinaryImage::BinaryImage(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw InvalidInput("negative image dimensions");
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

std::size_t BinaryImage::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

RasterImage BinaryImage::to_raster() const {
  std::vector<std::uint8_t> s(bits_.size());
  std::transform(bits_.begin(), bits_.end(), s.begin(), [](std::uint8_t b) {
    return b ? kBinaryForeground : kBinaryBackground;
  });
  return RasterImage(width_, height_, PixelFormat::binary, std::move(s));
}

RasterImage BinaryImage::to_gray() const {
  auto r = to_raster();
  return RasterImage(width_, height_, PixelFormat::gray8,
                     std::vector<std::uint8_t>(r.samples().begin(), r.samples().end()));
}

BinaryImage BinaryImage::from_raster(const RasterImage& img, std::uint8_t threshold) {
  const RasterImage gray = img.format() == PixelFormat::rgb8 ? to_grayscale(img) : img;
  BinaryImage out(gray.width(), gray.height());
  const auto s = gray.samples();
  for (std::size_t i = 0; i < s.size(); ++i) out.bits_[i] = s[i] < threshold ? 1 : 0;
  return out;
}

std::size_t intersection_count(const BinaryImage& a, const BinaryImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw InvalidInput("intersection_count: dimension mismatch");
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.pixel_count(); ++i) n += a.bits()[i] & b.bits()[i];
  return n;
}

bool is_subset(const BinaryImage& inner, const BinaryImage& outer) {
  if (inner.width() != outer.width() || inner.height() != outer.height()) return false;
  for (std::size_t i = 0; i < inner.pixel_count(); ++i) {
    if (inner.bits()[i] && !outer.bits()[i]) return false;
  }
  return true;
}

int count_components(const BinaryImage& img, int connectivity) {
  const int w = img.width();
  const int h = img.height();
  std::vector<std::uint8_t> seen(img.pixel_count(), 0);
  std::vector<int> stack;
  int components = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto start = static_cast<std::size_t>(y) * w + x;
      if (!img.at_index(start) || seen[start]) continue;
      ++components;
      seen[start] = 1;
      stack.push_back(static_cast<int>(start));
      while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        const int px = p % w;
        const int py = p / w;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if ((dx == 0 && dy == 0) || (connectivity == 4 && dx != 0 && dy != 0)) continue;
            const int nx = px + dx;
            const int ny = py + dy;
            if (!img.get_or_background(nx, ny)) continue;
            const auto q = static_cast<std::size_t>(ny) * w + nx;
            if (seen[q]) continue;
            seen[q] = 1;
            stack.push_back(static_cast<int>(q));
          }
        }
      }
    }
  }
  return components;
}

}  // namespace ais::imaging
