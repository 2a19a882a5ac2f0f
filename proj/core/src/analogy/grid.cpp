#include "ais/analogy/grid.hpp"

#include <string>

#include "ais/common/error.hpp"
#include "ais/imaging/resample.hpp"

namespace ais::analogy {

std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::top_left: return "top_left";
    case Quadrant::top_right: return "top_right";
    case Quadrant::bottom_left: return "bottom_left";
    case Quadrant::bottom_right: return "bottom_right";
  }
  return "?";
}

Quadrant parse_quadrant(std::string_view text) {
  if (text == "top_left") return Quadrant::top_left;
  if (text == "top_right") return Quadrant::top_right;
  if (text == "bottom_left") return Quadrant::bottom_left;
  if (text == "bottom_right") return Quadrant::bottom_right;
  throw InvalidInput("unknown panel '" + std::string(text) + "'");
}

namespace {

void require_panel(const RasterImage& img, std::string_view name) {
  if (img.empty()) throw InvalidInput("compose_grid: missing panel " + std::string(name));
}

imaging::PixelFormat canvas_format(std::initializer_list<const RasterImage*> panels) {
  for (const auto* p : panels) {
    if (p && p->format() == imaging::PixelFormat::rgb8) return imaging::PixelFormat::rgb8;
  }
  return imaging::PixelFormat::gray8;
}

void place(RasterImage& canvas, const RasterImage& panel, int side, int col, int row) {
  imaging::paste(canvas, imaging::letterbox(panel, side), col * side, row * side);
}

void fill_masked(RasterImage& canvas, int x0, int y0, int side) {
  const int c = canvas.channels();
  for (int y = y0; y < y0 + side; ++y) {
    for (int x = x0; x < x0 + side; ++x) {
      for (int k = 0; k < c; ++k) canvas.at(x, y, k) = kMaskFill;
    }
  }
}

void check_panel_size(int panel_size) {
  if (panel_size < kMinPanelSize) {
    throw InvalidInput("panel size must be >= " + std::to_string(kMinPanelSize));
  }
}

}  // namespace

AnalogyGrid AnalogyGrid::from_canvas(RasterImage canvas, Layout layout, bool masked) {
  AnalogyGrid g;
  const int w = canvas.width();
  const int h = canvas.height();
  const bool ok = layout == Layout::grid_2x2 ? (w == h && w % 2 == 0) : (w == 2 * h);
  if (!ok || w == 0) throw InvalidInput("canvas geometry does not match the grid layout");
  g.panel_size = layout == Layout::grid_2x2 ? w / 2 : h;
  if (g.panel_size < kMinPanelSize) {
    throw InvalidInput("canvas panels are smaller than " + std::to_string(kMinPanelSize) + " px");
  }
  g.canvas = std::move(canvas);
  g.layout = layout;
  g.masked = masked;
  return g;
}

AnalogyGrid compose_grid(const RasterImage& a, const RasterImage& a_prime, const RasterImage& b,
                         const std::optional<RasterImage>& b_prime, int panel_size) {
  require_panel(a, "A");
  require_panel(a_prime, "A'");
  require_panel(b, "B");
  if (b_prime) require_panel(*b_prime, "B'");
  check_panel_size(panel_size);

  AnalogyGrid g;
  g.panel_size = panel_size;
  g.layout = Layout::grid_2x2;
  g.masked = !b_prime.has_value();
  g.canvas = RasterImage(2 * panel_size, 2 * panel_size,
                         canvas_format({&a, &a_prime, &b, b_prime ? &*b_prime : nullptr}));
  place(g.canvas, a, panel_size, 0, 0);
  place(g.canvas, a_prime, panel_size, 1, 0);
  place(g.canvas, b, panel_size, 0, 1);
  if (b_prime) {
    place(g.canvas, *b_prime, panel_size, 1, 1);
  } else {
    fill_masked(g.canvas, panel_size, panel_size, panel_size);
  }
  return g;
}

AnalogyGrid compose_row(const RasterImage& a, const std::optional<RasterImage>& a_prime,
                        int panel_size) {
  require_panel(a, "A");
  if (a_prime) require_panel(*a_prime, "A'");
  check_panel_size(panel_size);

  AnalogyGrid g;
  g.panel_size = panel_size;
  g.layout = Layout::row_1x2;
  g.masked = !a_prime.has_value();
  g.canvas = RasterImage(2 * panel_size, panel_size,
                         canvas_format({&a, a_prime ? &*a_prime : nullptr}));
  place(g.canvas, a, panel_size, 0, 0);
  if (a_prime) {
    place(g.canvas, *a_prime, panel_size, 1, 0);
  } else {
    fill_masked(g.canvas, panel_size, 0, panel_size);
  }
  return g;
}

BinaryImage inference_mask(const AnalogyGrid& grid) {
  if (!grid.masked) throw InvalidInput("inference_mask: grid has no masked panel");
  const int p = grid.panel_size;
  BinaryImage mask(grid.canvas.width(), grid.canvas.height());
  const int y0 = grid.layout == Layout::grid_2x2 ? p : 0;
  for (int y = y0; y < grid.canvas.height(); ++y) {
    for (int x = p; x < grid.canvas.width(); ++x) mask.set(x, y);
  }
  return mask;
}

RasterImage extract_panel(const AnalogyGrid& grid, Quadrant which) {
  const int p = grid.panel_size;
  int col = 0;
  int row = 0;
  switch (which) {
    case Quadrant::top_left: break;
    case Quadrant::top_right: col = 1; break;
    case Quadrant::bottom_left: row = 1; break;
    case Quadrant::bottom_right: col = 1; row = 1; break;
  }
  if (grid.layout == Layout::row_1x2 && row == 1) {
    throw InvalidInput("extract_panel: a 1x2 layout has no bottom row");
  }
  return imaging::crop(grid.canvas, col * p, row * p, p, p);
}

}  // namespace ais::analogy
