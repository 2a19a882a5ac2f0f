#pragma once

#include <string>
#include <string_view>

#include "ais/imaging/binary_image.hpp"
#include "ais/imaging/raster.hpp"
#include "ais/vectorizer/layers.hpp"

namespace ais::representations {

inline constexpr std::string_view kPipelineVersion = "ais-pipeline/1";

enum class Role { target, reference };
std::string_view to_string(Role role);

/// Where an artifact came from; enough to recompute it.
struct Provenance {
  std::string input;           // source path (informational)
  std::string content_sha256;  // hash of the decoded input pixels
  std::string params_json;     // canonical JSON of the full parameter set
  std::string pipeline_version{kPipelineVersion};

  std::string params_sha256() const;
  /// Sidecar document: {"input", "content_sha256", "params", "params_sha256",
  /// "pipeline_version", plus any `extra` JSON object members}.
  std::string to_json(std::string_view kind, std::string_view extra_json = "{}") const;
};

/// Hash of an image's dimensions, format and samples.
std::string image_sha256(const imaging::RasterImage& img);

struct BackboneParams {
  int layer_count = 4;
  int erosion_radius = 25;      // at reference_resolution, scaled linearly
  double stroke_width = 2.0;    // pixels, not scaled
  bool skeleton_only = false;   // drop the eroded residuals
  bool drop_background = true;  // never select the canvas background layer
  int reference_resolution = 1024;
  vectorizer::VectorizeParams vectorize;

  /// erosion_radius * min(width, height) / reference_resolution, rounded half-up.
  int radius_for(int width, int height) const;
  std::string to_json() const;
};

struct HiddenBackbone {
  imaging::BinaryImage image;  // foreground renders black
  Provenance source;
  Role role = Role::target;
};

/// Intermediate products of one backbone build.
struct BackboneParts {
  imaging::BinaryImage render;    // selected layers, fill black / stroke white, binarized
  imaging::BinaryImage skeleton;  // skeletonize(render)
  imaging::BinaryImage eroded;    // erode(render, disk), empty when skeleton_only
  imaging::BinaryImage backbone;  // skeleton | eroded
  int radius = 0;
  int selected_layers = 0;
};

/// vectorize -> rearmost `layer_count` non-background layers -> fill black,
/// stroke white -> binarize (< 128) -> skeletonize | erode -> union.
/// Throws InvalidInput("no layers ...") when vectorization leaves no shape.
BackboneParts build_backbone_parts(const imaging::RasterImage& img, const BackboneParams& params);

HiddenBackbone build_backbone(const imaging::RasterImage& img, const BackboneParams& params,
                              Role role = Role::target, std::string input_name = {});

struct AbstractionProxy {
  imaging::RasterImage image;  // gray8, or rgb8 for the colour ablation
  Provenance source;
  Role role = Role::reference;
};

/// vectorize -> all layers in flat colour -> grayscale. Throws when the
/// image has no shape besides its background.
AbstractionProxy build_reference_proxy(const imaging::RasterImage& exemplar,
                                       const vectorizer::VectorizeParams& params,
                                       std::string input_name = {});

enum class ProxyAblation { none, vector_simplification_only, color };
std::string_view to_string(ProxyAblation mode);
ProxyAblation parse_proxy_ablation(std::string_view text);

/// none: the input itself; vector_simplification_only: same as
/// build_reference_proxy; color: flat-colour rasterization kept in rgb.
imaging::RasterImage ablation_proxy(const imaging::RasterImage& img, ProxyAblation mode,
                                    const vectorizer::VectorizeParams& params);

struct StylizedOutput {
  imaging::RasterImage image;
  std::string proxy_sha256;
  std::string avat_id;  // empty when stage one was skipped
  std::string svat_id;
};

}  // namespace ais::representations
