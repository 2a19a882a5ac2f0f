#pragma once

#include <cstdint>
#include <vector>

#include "ais/imaging/binary_image.hpp"
#include "ais/vectorizer/palette.hpp"

namespace ais::vectorizer {

/// A 4-connected flat-colour region of the canvas.
struct Region {
  int canvas_width = 0;
  int canvas_height = 0;
  std::uint16_t label = 0;
  Rgb fill;
  std::vector<std::uint32_t> pixels;  // ascending row-major indices

  std::size_t area() const noexcept { return pixels.size(); }
  /// Row-major index of the topmost-leftmost pixel.
  std::uint32_t first_pixel() const { return pixels.front(); }
  imaging::BinaryImage mask() const;
};

/// Splits the palette image into 4-connected equal-label components.
///
/// Components smaller than `min_area` are absorbed one at a time, smallest
/// first (ties: earlier topmost-leftmost pixel). Each is merged into the
/// neighbouring component sharing the longest 4-adjacent border; ties go to
/// the lower palette label, then to the earlier topmost-leftmost pixel. The
/// absorbed pixels take the absorber's label. Once no small component is left
/// (or only one component remains) the final regions are the 4-connected
/// equal-label components of the relabelled map, in scanline order of their
/// first pixel.
std::vector<Region> extract_regions(const PaletteImage& pimg, int min_area);

}  // namespace ais::vectorizer
