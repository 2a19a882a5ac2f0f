#include "ais/vectorizer/layers.hpp"

#include <algorithm>
#include <cmath>

#include "ais/common/error.hpp"

namespace ais::vectorizer {

namespace {

template <typename Paint>
void fill_even_odd(const VectorLayer& layer, int width, int height, Paint&& paint) {
  int ymin = height, ymax = -1;
  for (const auto& p : layer.outer.points) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  ymin = std::max(ymin, 0);
  ymax = std::min(ymax, height);
  if (ymax <= ymin) return;

  std::vector<std::vector<double>> crossings(static_cast<std::size_t>(ymax - ymin));
  auto add_ring = [&](const VectorPath& ring) {
    const auto& pts = ring.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point& a = pts[i];
      const Point& b = pts[(i + 1) % pts.size()];
      if (a.y == b.y) continue;
      const int lo = std::max(std::min(a.y, b.y), ymin);
      const int hi = std::min(std::max(a.y, b.y), ymax);
      // Row y samples at y + 0.5; rows in [min(a.y,b.y), max(a.y,b.y)) cross.
      for (int y = lo; y < hi; ++y) {
        const double yc = y + 0.5;
        const double x = a.x + (yc - a.y) * static_cast<double>(b.x - a.x) / (b.y - a.y);
        crossings[static_cast<std::size_t>(y - ymin)].push_back(x);
      }
    }
  };
  add_ring(layer.outer);
  for (const auto& h : layer.holes) add_ring(h);

  for (int y = ymin; y < ymax; ++y) {
    auto& xs = crossings[static_cast<std::size_t>(y - ymin)];
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      const int x0 = std::max(0, static_cast<int>(std::ceil(xs[i] - 0.5)));
      const int x1 = std::min(width, static_cast<int>(std::ceil(xs[i + 1] - 0.5)));
      for (int x = x0; x < x1; ++x) paint(x, y);
    }
  }
}

double segment_distance(double px, double py, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((px - a.x) * dx + (py - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px - (a.x + t * dx), py - (a.y + t * dy));
}

template <typename Paint>
void stroke_ring(const VectorPath& ring, double stroke_width, int width, int height,
                 Paint&& paint) {
  const double half = stroke_width / 2.0;
  const auto& pts = ring.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % pts.size()];
    const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - half - 1)));
    const int x1 = std::min(width - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + half + 1)));
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - half - 1)));
    const int y1 = std::min(height - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + half + 1)));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        if (segment_distance(x + 0.5, y + 0.5, a, b) <= half) paint(x, y);
      }
    }
  }
}

}  // namespace

imaging::RasterImage rasterize_layers(std::span<const VectorLayer> layers, ZRange selection,
                                      RenderMode mode, int width, int height,
                                      double stroke_width) {
  if (width <= 0 || height <= 0) throw InvalidInput("rasterize_layers: empty canvas");
  std::vector<const VectorLayer*> chosen;
  for (const auto& l : layers) {
    if (selection.contains(l.z)) chosen.push_back(&l);
  }
  if (chosen.empty()) throw InvalidInput("rasterize_layers: empty layer selection");
  std::stable_sort(chosen.begin(), chosen.end(),
                   [](const VectorLayer* a, const VectorLayer* b) { return a->z < b->z; });

  if (mode == RenderMode::flat_color) {
    auto canvas = imaging::RasterImage::filled(width, height, imaging::kWhite);
    for (const auto* l : chosen) {
      fill_even_odd(*l, width, height, [&](int x, int y) { canvas.set_rgb(x, y, l->fill); });
    }
    return canvas;
  }

  if (stroke_width < 0.0) throw InvalidInput("rasterize_layers: negative stroke width");
  imaging::RasterImage canvas(width, height, imaging::PixelFormat::gray8, 255);
  for (const auto* l : chosen) {
    fill_even_odd(*l, width, height, [&](int x, int y) { canvas.at(x, y) = 0; });
    if (stroke_width > 0.0) {
      auto white = [&](int x, int y) { canvas.at(x, y) = 255; };
      stroke_ring(l->outer, stroke_width, width, height, white);
      for (const auto& h : l->holes) stroke_ring(h, stroke_width, width, height, white);
    }
  }
  return canvas;
}

}  // namespace ais::vectorizer
