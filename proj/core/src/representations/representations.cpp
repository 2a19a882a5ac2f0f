#include "ais/representations/representations.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "ais/common/error.hpp"
#include "ais/imaging/morphology.hpp"

namespace ais::representations {

using imaging::BinaryImage;
using imaging::RasterImage;

int BackboneParams::radius_for(int width, int height) const {
  if (erosion_radius < 0) throw InvalidInput("erosion radius must be >= 0");
  const long long side = std::min(width, height);
  return static_cast<int>((2LL * erosion_radius * side + reference_resolution) /
                          (2LL * reference_resolution));
}

BackboneParts build_backbone_parts(const RasterImage& img, const BackboneParams& params) {
  if (params.layer_count < 1) throw InvalidInput("layer_count must be >= 1");
  const auto vec = vectorizer::vectorize(img, params.vectorize);
  std::vector<vectorizer::VectorLayer> pool =
      params.drop_background ? vec.shapes() : vec.layers;
  if (pool.empty()) {
    throw InvalidInput("no layers: vectorization found no shape besides the background");
  }
  // Rearmost first; keep the layer_count lowest z values.
  if (pool.size() > static_cast<std::size_t>(params.layer_count)) {
    pool.resize(static_cast<std::size_t>(params.layer_count));
  }

  BackboneParts parts;
  parts.selected_layers = static_cast<int>(pool.size());
  parts.radius = params.radius_for(img.width(), img.height());
  const RasterImage render = vectorizer::rasterize_layers(
      pool, {pool.front().z, pool.back().z}, vectorizer::RenderMode::fill_black_stroke_white,
      img.width(), img.height(), params.stroke_width);
  parts.render = BinaryImage::from_raster(render, 128);
  parts.skeleton = imaging::skeletonize(parts.render);
  parts.eroded = params.skeleton_only
                     ? BinaryImage(img.width(), img.height())
                     : imaging::erode(parts.render, imaging::StructuringDisk(parts.radius));
  parts.backbone = imaging::union_of(parts.skeleton, parts.eroded);
  return parts;
}

HiddenBackbone build_backbone(const RasterImage& img, const BackboneParams& params, Role role,
                              std::string input_name) {
  BackboneParts parts = build_backbone_parts(img, params);
  HiddenBackbone out;
  out.image = std::move(parts.backbone);
  out.role = role;
  out.source.input = std::move(input_name);
  out.source.content_sha256 = image_sha256(img);
  out.source.params_json = params.to_json();
  return out;
}

namespace {

std::string vectorize_params_json(const vectorizer::VectorizeParams& p, std::string_view mode) {
  nlohmann::json j = {{"colors", p.colors},
                      {"min_area", p.min_area},
                      {"epsilon", p.epsilon},
                      {"reference_resolution", p.reference_resolution},
                      {"mode", mode}};
  return j.dump();
}

RasterImage flat_render(const RasterImage& img, const vectorizer::VectorizeParams& params) {
  const auto vec = vectorizer::vectorize(img, params);
  if (vec.shapes().empty()) {
    throw InvalidInput("no layers: vectorization found no shape besides the background");
  }
  return vectorizer::rasterize_layers(vec.layers, {0, static_cast<int>(vec.layers.size()) - 1},
                                      vectorizer::RenderMode::flat_color, img.width(),
                                      img.height());
}

}  // namespace

AbstractionProxy build_reference_proxy(const RasterImage& exemplar,
                                       const vectorizer::VectorizeParams& params,
                                       std::string input_name) {
  AbstractionProxy out;
  out.image = imaging::to_grayscale(flat_render(exemplar, params));
  out.role = Role::reference;
  out.source.input = std::move(input_name);
  out.source.content_sha256 = image_sha256(exemplar);
  out.source.params_json = vectorize_params_json(params, "grayscale");
  return out;
}

std::string_view to_string(ProxyAblation mode) {
  switch (mode) {
    case ProxyAblation::none: return "none";
    case ProxyAblation::vector_simplification_only: return "vec";
    case ProxyAblation::color: return "color";
  }
  return "?";
}

ProxyAblation parse_proxy_ablation(std::string_view text) {
  if (text == "none") return ProxyAblation::none;
  if (text == "vec" || text == "vector_simplification_only") {
    return ProxyAblation::vector_simplification_only;
  }
  if (text == "color") return ProxyAblation::color;
  throw InvalidInput("unknown proxy ablation '" + std::string(text) + "'");
}

RasterImage ablation_proxy(const RasterImage& img, ProxyAblation mode,
                           const vectorizer::VectorizeParams& params) {
  switch (mode) {
    case ProxyAblation::none:
      return img;
    case ProxyAblation::vector_simplification_only:
      return build_reference_proxy(img, params).image;
    case ProxyAblation::color:
      return flat_render(img, params);
  }
  throw InvalidInput("unknown proxy ablation");
}

}  // namespace ais::representations
