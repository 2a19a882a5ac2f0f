#pragma once

#include <optional>
#include <string_view>

#include "ais/imaging/binary_image.hpp"
#include "ais/imaging/raster.hpp"

namespace ais::analogy {

using imaging::BinaryImage;
using imaging::RasterImage;

enum class Quadrant { top_left, top_right, bottom_left, bottom_right };
std::string_view to_string(Quadrant q);
Quadrant parse_quadrant(std::string_view text);

enum class Layout {
  grid_2x2,  // A | A' over B | B'
  row_1x2,   // A | A' on a half-height canvas
};

/// Fill value of the masked panel.
inline constexpr std::uint8_t kMaskFill = 128;
inline constexpr int kMinPanelSize = 64;

/// Seamless panel composite. The canvas is rgb8 when any panel is rgb8,
/// gray8 otherwise.
struct AnalogyGrid {
  RasterImage canvas;
  int panel_size = 0;
  Layout layout = Layout::grid_2x2;
  bool masked = false;  // last panel awaits inpainting

  /// Wraps an existing canvas, e.g. a backend response.
  static AnalogyGrid from_canvas(RasterImage canvas, Layout layout, bool masked = false);
};

/// Letterboxes each panel (white padding, bilinear) into panel_size^2 and
/// tiles them. A nullopt b_prime leaves the bottom-right panel masked (128).
/// Empty a, a_prime or b images are rejected as missing.
AnalogyGrid compose_grid(const RasterImage& a, const RasterImage& a_prime, const RasterImage& b,
                         const std::optional<RasterImage>& b_prime, int panel_size);

/// One-row A | A' composite; nullopt a_prime masks the right panel.
AnalogyGrid compose_row(const RasterImage& a, const std::optional<RasterImage>& a_prime,
                        int panel_size);

/// Foreground exactly on the masked panel. Throws when the grid is complete.
BinaryImage inference_mask(const AnalogyGrid& grid);

/// Exact crop of one panel. For row_1x2, top_left/top_right are the panels.
RasterImage extract_panel(const AnalogyGrid& grid, Quadrant which);

}  // namespace ais::analogy
