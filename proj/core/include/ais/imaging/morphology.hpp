#pragma once

#include <utility>
#include <vector>

#include "ais/imaging/binary_image.hpp"

namespace ais::imaging {

/// Closed disk structuring element: (dx, dy) is a member iff dx^2 + dy^2 <= r^2.
class StructuringDisk {
 public:
  explicit StructuringDisk(int radius);

  int radius() const noexcept { return radius_; }
  bool contains(int dx, int dy) const noexcept {
    return dx * dx + dy * dy <= radius_ * radius_;
  }
  /// Half-width of the disk row at vertical offset dy (|dy| <= radius).
  int half_width(int dy) const { return half_widths_[static_cast<std::size_t>(dy + radius_)]; }
  std::vector<std::pair<int, int>> offsets() const;

 private:
  int radius_;
  std::vector<int> half_widths_;
};

/// Zhang-Suen two-subiteration thinning, run to a fixpoint. Pixels outside
/// the canvas are background.
BinaryImage skeletonize(const BinaryImage& img);

/// Binary erosion by a disk; out-of-canvas pixels are background, so shapes
/// touching the border shrink from it.
BinaryImage erode(const BinaryImage& img, const StructuringDisk& disk);

/// Pixelwise union. Throws InvalidInput on dimension mismatch.
BinaryImage union_of(const BinaryImage& a, const BinaryImage& b);

}  // namespace ais::imaging
