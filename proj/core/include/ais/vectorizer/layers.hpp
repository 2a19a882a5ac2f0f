#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ais/imaging/raster.hpp"
#include "ais/vectorizer/palette.hpp"
#include "ais/vectorizer/path.hpp"
#include "ais/vectorizer/regions.hpp"

namespace ais::vectorizer {

/// One flat-colour shape of a back-to-front layer stack.
struct VectorLayer {
  VectorPath outer;
  std::vector<VectorPath> holes;
  Rgb fill;
  int z = 0;  // 0 = rearmost
  std::size_t area = 0;
  std::uint32_t first_pixel = 0;
  std::size_t border_pixels = 0;  // region pixels on the canvas edge
};

/// Traces and simplifies each region, then orders them back to front by
/// descending area (ties: earlier topmost-leftmost pixel) and assigns z.
std::vector<VectorLayer> order_layers(const std::vector<Region>& regions, double eps);

struct VectorizeParams {
  int colors = 8;         // palette size k
  int min_area = 64;      // pixels, at the reference resolution
  double epsilon = 1.5;   // RDP threshold in pixels
  int reference_resolution = 1024;

  /// min_area scaled by (min(width, height) / reference_resolution)^2, at least 1.
  int min_area_for(int width, int height) const;
};

struct Vectorization {
  int width = 0;
  int height = 0;
  std::vector<VectorLayer> layers;
  /// z of the canvas background layer, if one was detected.
  std::optional<int> background_z;

  /// Layers other than the background, in z order.
  std::vector<VectorLayer> shapes() const;
};

/// The background is the layer covering the most canvas-edge pixels,
/// provided it covers at least half of them.
std::optional<int> find_background(std::span<const VectorLayer> layers, int width, int height);

/// quantize -> regions -> trace/simplify -> order.
Vectorization vectorize(const imaging::RasterImage& img, const VectorizeParams& params);

enum class RenderMode { flat_color, fill_black_stroke_white };

/// Inclusive z range.
struct ZRange {
  int first = 0;
  int last = 0;
  bool contains(int z) const noexcept { return z >= first && z <= last; }
};

/// Paints the layers with z in `selection` in ascending z. Fill uses the
/// even-odd rule at pixel centres over the outer ring and its holes.
///
/// flat_color: each layer in its fill colour over white, rgb8 output.
/// fill_black_stroke_white: each layer black, then every ring overdrawn by a
/// white stroke of `stroke_width` pixels centred on it (pixel centres within
/// stroke_width / 2 of the ring), gray8 output.
///
/// Throws InvalidInput if no layer falls inside `selection`.
imaging::RasterImage rasterize_layers(std::span<const VectorLayer> layers, ZRange selection,
                                      RenderMode mode, int width, int height,
                                      double stroke_width = 2.0);

/// Debug export: one <path> per layer, back to front, holes via evenodd.
std::string layers_to_svg(std::span<const VectorLayer> layers, int width, int height);

}  // namespace ais::vectorizer
