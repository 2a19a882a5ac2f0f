#include "ais/vectorizer/layers.hpp"

#include <algorithm>
#include <cmath>

#include "ais/common/error.hpp"

namespace ais::vectorizer {

std::vector<VectorLayer> order_layers(const std::vector<Region>& regions, double eps) {
  std::vector<VectorLayer> layers;
  layers.reserve(regions.size());
  for (const Region& r : regions) {
    if (r.pixels.empty()) continue;
    Contour c = trace_pixels(r.pixels, r.canvas_width);
    VectorLayer layer;
    layer.outer = simplify_path(c.outer, eps);
    for (const auto& hole : c.holes) layer.holes.push_back(simplify_path(hole, eps));
    layer.fill = r.fill;
    layer.area = r.area();
    layer.first_pixel = r.first_pixel();
    const auto w = static_cast<std::uint32_t>(r.canvas_width);
    const auto h = static_cast<std::uint32_t>(r.canvas_height);
    for (auto p : r.pixels) {
      const auto x = p % w;
      const auto y = p / w;
      if (x == 0 || y == 0 || x + 1 == w || y + 1 == h) ++layer.border_pixels;
    }
    layers.push_back(std::move(layer));
  }
  std::stable_sort(layers.begin(), layers.end(), [](const VectorLayer& a, const VectorLayer& b) {
    return a.area != b.area ? a.area > b.area : a.first_pixel < b.first_pixel;
  });
  for (std::size_t i = 0; i < layers.size(); ++i) layers[i].z = static_cast<int>(i);
  return layers;
}

int VectorizeParams::min_area_for(int width, int height) const {
  const double scale = static_cast<double>(std::min(width, height)) / reference_resolution;
  return std::max(1, static_cast<int>(std::lround(min_area * scale * scale)));
}

std::vector<VectorLayer> Vectorization::shapes() const {
  std::vector<VectorLayer> out;
  for (const auto& l : layers) {
    if (!background_z || l.z != *background_z) out.push_back(l);
  }
  return out;
}

std::optional<int> find_background(std::span<const VectorLayer> layers, int width, int height) {
  if (layers.empty() || width <= 0 || height <= 0) return std::nullopt;
  const std::size_t ring = (width == 1 || height == 1)
                               ? static_cast<std::size_t>(width) * height
                               : 2 * static_cast<std::size_t>(width + height) - 4;
  const VectorLayer* best = nullptr;
  for (const auto& l : layers) {
    if (!best || l.border_pixels > best->border_pixels) best = &l;
  }
  if (best && 2 * best->border_pixels >= ring) return best->z;
  return std::nullopt;
}

Vectorization vectorize(const imaging::RasterImage& img, const VectorizeParams& params) {
  if (params.epsilon < 0.0) throw InvalidInput("vectorize: epsilon must be >= 0");
  const PaletteImage pimg = quantize_colors(img, params.colors);
  const auto regions = extract_regions(pimg, params.min_area_for(img.width(), img.height()));
  Vectorization out;
  out.width = img.width();
  out.height = img.height();
  out.layers = order_layers(regions, params.epsilon);
  out.background_z = find_background(out.layers, out.width, out.height);
  return out;
}

}  // namespace ais::vectorizer
