#pragma once

#include "ais/imaging/binary_image.hpp"

namespace ais::orchestrator {

struct StructuralReport {
  double backbone_iou = 1.0;  // |a & b| / |a | b|, 1 when both are empty
  int component_delta = 0;    // |cc(a) - cc(b)|, 8-connected
  double fg_ratio_delta = 0;  // | |a| / area - |b| / area |
};

/// Symmetric in its arguments. Throws InvalidInput on a size mismatch.
StructuralReport eval_structural(const imaging::BinaryImage& a, const imaging::BinaryImage& b);

}  // namespace ais::orchestrator
