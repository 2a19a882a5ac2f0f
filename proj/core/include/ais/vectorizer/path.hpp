#pragma once

#include <vector>

#include "ais/imaging/binary_image.hpp"

namespace ais::vectorizer {

/// Lattice point; (x, y) is the top-left corner of pixel (x, y).
struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct VectorPath {
  std::vector<Point> points;
  bool closed = true;

  std::size_t size() const noexcept { return points.size(); }
  friend bool operator==(const VectorPath&, const VectorPath&) = default;
};

/// Twice the shoelace area in pixel coordinates (y down). Negative for
/// paths that run counter-clockwise as displayed.
long long signed_area2(const VectorPath& path);

/// Boundary of one 4-connected region: outer ring counter-clockwise as
/// displayed, holes clockwise.
struct Contour {
  VectorPath outer;
  std::vector<VectorPath> holes;
};

/// Traces the crack boundary (pixel edges) of the single 4-connected component
/// in `mask`, emitting only corner vertices.
///
/// Each ring is followed Moore-style with the foreground kept on the left and
/// stops by Jacob's criterion: when the start edge is re-entered in its
/// original direction. Where two foreground pixels meet only diagonally the
/// walk turns away, so rings never join pixels that are not 4-connected. The
/// outer ring starts at the top-left corner of the topmost-leftmost pixel.
///
/// Throws InvalidInput for an empty mask or a mask with several components.
Contour trace_contour(const imaging::BinaryImage& mask);

/// Same as trace_contour but takes the region as sorted row-major pixel
/// indices of a canvas_width-wide canvas and skips the component check.
Contour trace_pixels(const std::vector<std::uint32_t>& pixels, int canvas_width);

/// Ramer-Douglas-Peucker with perpendicular-distance threshold `eps`.
/// Closed paths are first split at their two mutually farthest vertices and
/// keep at least three vertices; the surviving vertices keep their original
/// order. eps == 0 returns the input unchanged.
VectorPath simplify_path(const VectorPath& path, double eps);

}  // namespace ais::vectorizer
