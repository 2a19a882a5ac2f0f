#include "ais/vectorizer/path.hpp"

#include <algorithm>
#include <array>

#include "ais/common/error.hpp"

namespace ais::vectorizer {

long long signed_area2(const VectorPath& path) {
  long long acc = 0;
  const auto& p = path.points;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % p.size()];
    acc += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
  }
  return acc;
}

namespace {

// Directions in screen space: east, south, west, north.
enum Dir : int { kEast = 0, kSouth = 1, kWest = 2, kNorth = 3 };
constexpr std::array<int, 4> kDx{1, 0, -1, 0};
constexpr std::array<int, 4> kDy{0, 1, 0, -1};

constexpr int turn_left(int d) { return (d + 3) % 4; }
constexpr int turn_right(int d) { return (d + 1) % 4; }

/// Local foreground grid with a one-pixel background margin.
class Grid {
 public:
  Grid(int w, int h) : w_(w), h_(h), cells_(static_cast<std::size_t>(w) * h, 0) {}

  int width() const { return w_; }
  int height() const { return h_; }
  bool fg(int x, int y) const {
    return x >= 0 && y >= 0 && x < w_ && y < h_ && cells_[static_cast<std::size_t>(y) * w_ + x];
  }
  void set(int x, int y) { cells_[static_cast<std::size_t>(y) * w_ + x] = 1; }

 private:
  int w_;
  int h_;
  std::vector<std::uint8_t> cells_;
};

// Pixels to the left / right of the unit edge leaving vertex (vx, vy) in d.
void edge_pixels(int vx, int vy, int d, int& lx, int& ly, int& rx, int& ry) {
  switch (d) {
    case kEast: lx = vx; ly = vy - 1; rx = vx; ry = vy; break;
    case kSouth: lx = vx; ly = vy; rx = vx - 1; ry = vy; break;
    case kWest: lx = vx - 1; ly = vy; rx = vx - 1; ry = vy - 1; break;
    default: lx = vx - 1; ly = vy - 1; rx = vx; ry = vy - 1; break;
  }
}

class Tracer {
 public:
  explicit Tracer(const Grid& grid)
      : grid_(grid),
        visited_(static_cast<std::size_t>(grid.width() + 1) * (grid.height() + 1) * 4, 0) {}

  bool is_boundary_edge(int vx, int vy, int d) const {
    int lx, ly, rx, ry;
    edge_pixels(vx, vy, d, lx, ly, rx, ry);
    return grid_.fg(lx, ly) && !grid_.fg(rx, ry);
  }
  bool visited(int vx, int vy, int d) const { return visited_[id(vx, vy, d)] != 0; }

  VectorPath trace(int sx, int sy, int sd) {
    VectorPath path;
    int vx = sx, vy = sy, d = sd;
    do {
      visited_[id(vx, vy, d)] = 1;
      const int ux = vx + kDx[d];
      const int uy = vy + kDy[d];
      int alx, aly, arx, ary;
      edge_pixels(ux, uy, d, alx, aly, arx, ary);
      int nd = d;
      if (!grid_.fg(alx, aly)) {
        nd = turn_left(d);
      } else if (grid_.fg(arx, ary)) {
        nd = turn_right(d);
      }
      if (nd != d) path.points.push_back({ux, uy});
      vx = ux;
      vy = uy;
      d = nd;
    } while (!(vx == sx && vy == sy && d == sd));

    // Rotate so the ring starts at its topmost-leftmost corner.
    auto first = std::min_element(path.points.begin(), path.points.end(),
                                  [](const Point& a, const Point& b) {
                                    return a.y != b.y ? a.y < b.y : a.x < b.x;
                                  });
    std::rotate(path.points.begin(), first, path.points.end());
    path.closed = true;
    return path;
  }

 private:
  std::size_t id(int vx, int vy, int d) const {
    return (static_cast<std::size_t>(vy) * (grid_.width() + 1) + vx) * 4 + d;
  }

  const Grid& grid_;
  std::vector<std::uint8_t> visited_;
};

Contour trace_grid(const Grid& grid, int ox, int oy) {
  Tracer tracer(grid);
  Contour out;
  bool have_outer = false;
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (!grid.fg(x, y)) continue;
      // Top, left, bottom, right sides as directed edges with fg on the left.
      const std::array<std::array<int, 3>, 4> sides{{
          {x + 1, y, kWest}, {x, y, kSouth}, {x, y + 1, kEast}, {x + 1, y + 1, kNorth}}};
      for (const auto& [vx, vy, d] : sides) {
        if (!tracer.is_boundary_edge(vx, vy, d) || tracer.visited(vx, vy, d)) continue;
        VectorPath ring = tracer.trace(vx, vy, d);
        for (auto& p : ring.points) {
          p.x += ox;
          p.y += oy;
        }
        if (!have_outer) {
          out.outer = std::move(ring);
          have_outer = true;
        } else {
          out.holes.push_back(std::move(ring));
        }
      }
    }
  }
  return out;
}

}  // namespace

Contour trace_pixels(const std::vector<std::uint32_t>& pixels, int canvas_width) {
  if (pixels.empty()) throw InvalidInput("trace_contour: empty region");
  const auto cw = static_cast<std::uint32_t>(canvas_width);
  int x0 = canvas_width, x1 = -1;
  const int y0 = static_cast<int>(pixels.front() / cw);
  const int y1 = static_cast<int>(pixels.back() / cw);
  for (auto p : pixels) {
    const int x = static_cast<int>(p % cw);
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
  }
  Grid grid(x1 - x0 + 1, y1 - y0 + 1);
  for (auto p : pixels) grid.set(static_cast<int>(p % cw) - x0, static_cast<int>(p / cw) - y0);
  return trace_grid(grid, x0, y0);
}

Contour trace_contour(const imaging::BinaryImage& mask) {
  if (mask.none()) throw InvalidInput("trace_contour: empty mask");
  if (imaging::count_components(mask, 4) != 1) {
    throw InvalidInput("trace_contour: mask must hold exactly one 4-connected component");
  }
  std::vector<std::uint32_t> pixels;
  for (std::size_t i = 0; i < mask.pixel_count(); ++i) {
    if (mask.at_index(i)) pixels.push_back(static_cast<std::uint32_t>(i));
  }
  return trace_pixels(pixels, mask.width());
}

}  // namespace ais::vectorizer
