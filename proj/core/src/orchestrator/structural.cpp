#include "ais/orchestrator/structural.hpp"

#include <cmath>
#include <cstdlib>

#include "ais/common/error.hpp"

namespace ais::orchestrator {

StructuralReport eval_structural(const imaging::BinaryImage& a, const imaging::BinaryImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw InvalidInput("eval: masks differ in size (" + std::to_string(a.width()) + "x" +
                       std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                       std::to_string(b.height()) + ")");
  }
  StructuralReport r;
  const std::size_t inter = imaging::intersection_count(a, b);
  const std::size_t na = a.count();
  const std::size_t nb = b.count();
  const std::size_t uni = na + nb - inter;
  r.backbone_iou = uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
  r.component_delta = std::abs(imaging::count_components(a, 8) - imaging::count_components(b, 8));
  const double area = static_cast<double>(a.pixel_count());
  r.fg_ratio_delta =
      area == 0 ? 0.0 : std::fabs(static_cast<double>(na) / area - static_cast<double>(nb) / area);
  return r;
}

}  // namespace ais::orchestrator
