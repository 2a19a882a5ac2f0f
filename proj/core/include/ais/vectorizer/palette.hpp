#pragma once

#include <cstdint>
#include <vector>

#include "ais/imaging/raster.hpp"

namespace ais::vectorizer {

using imaging::Rgb;

/// Per-pixel palette indices plus the palette itself.
struct PaletteImage {
  int width = 0;
  int height = 0;
  std::vector<Rgb> palette;
  std::vector<std::uint16_t> labels;  // row-major, each < palette.size()

  Rgb color_at(int x, int y) const {
    return palette[labels[static_cast<std::size_t>(y) * width + x]];
  }
  /// rgb8 image of the palette colours.
  imaging::RasterImage to_raster() const;
};

/// Median-cut palette over the colour histogram (the box with the largest
/// weighted squared error is split at the weighted median of its widest
/// channel), then nearest-colour assignment in RGB with ties going to the
/// lower palette index. Duplicate and unused palette entries are dropped.
/// gray8 input is treated as rgb with equal channels. Throws on k == 0.
PaletteImage quantize_colors(const imaging::RasterImage& img, int k);

}  // namespace ais::vectorizer
