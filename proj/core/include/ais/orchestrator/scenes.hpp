#pragma once

#include <string>
#include <vector>

#include "ais/imaging/raster.hpp"

namespace ais::orchestrator {

struct Scene {
  std::string name;
  imaging::RasterImage image;  // rgb8, size x size
  bool thin = false;           // every shape's inscribed radius is below 25 at 1024
};

/// Deterministic flat-colour synthetic scenes. Geometry is authored at 1024
/// and scaled to `size`.
std::vector<Scene> synthetic_scenes(int size = 1024);

/// Scene by name; throws InvalidInput when unknown.
Scene synthetic_scene(std::string_view name, int size = 1024);

}  // namespace ais::orchestrator
