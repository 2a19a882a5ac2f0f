#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ais/imaging/raster.hpp"

namespace ais::imaging {

/// Foreground set over a width x height pixel grid.
class BinaryImage {
 public:
  BinaryImage() = default;
  BinaryImage(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return bits_.size(); }

  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool get(int x, int y) const { return bits_[index(x, y)] != 0; }
  /// Out-of-canvas pixels read as background.
  bool get_or_background(int x, int y) const noexcept {
    return contains(x, y) && bits_[index(x, y)] != 0;
  }
  void set(int x, int y, bool fg = true) { bits_[index(x, y)] = fg ? 1 : 0; }

  bool at_index(std::size_t i) const { return bits_[i] != 0; }
  void set_index(std::size_t i, bool fg = true) { bits_[i] = fg ? 1 : 0; }

  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }

  /// Raw 0/1 bytes, row-major.
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Binary raster with foreground = 0 (black), background = 255.
  RasterImage to_raster() const;
  /// gray8 rendering with the same black-foreground convention.
  RasterImage to_gray() const;
  /// Accepts binary or gray8 (sample < 128 is foreground) rasters; rgb8 is
  /// reduced through Rec. 601 luma first.
  static BinaryImage from_raster(const RasterImage& img, std::uint8_t threshold = 128);

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Foreground intersection size; dimensions must match.
std::size_t intersection_count(const BinaryImage& a, const BinaryImage& b);

/// True when every foreground pixel of `inner` is foreground in `outer`.
bool is_subset(const BinaryImage& inner, const BinaryImage& outer);

/// Number of 8-connected (or 4-connected) foreground components.
int count_components(const BinaryImage& img, int connectivity = 8);

}  // namespace ais::imaging
