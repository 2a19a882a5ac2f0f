#include <nlohmann/json.hpp>

#include "ais/common/error.hpp"
#include "ais/common/hash.hpp"
#include "ais/representations/representations.hpp"

namespace ais::representations {

using nlohmann::json;

std::string_view to_string(Role role) {
  return role == Role::target ? "target" : "reference";
}

std::string Provenance::params_sha256() const { return sha256_hex(params_json); }

std::string Provenance::to_json(std::string_view kind, std::string_view extra_json) const {
  json doc = json::object();
  doc["kind"] = kind;
  doc["input"] = input;
  doc["content_sha256"] = content_sha256;
  doc["params"] = params_json.empty() ? json::object() : json::parse(params_json);
  doc["params_sha256"] = params_sha256();
  doc["pipeline_version"] = pipeline_version;
  const json extra = json::parse(extra_json);
  for (const auto& [key, value] : extra.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

std::string image_sha256(const imaging::RasterImage& img) {
  Sha256 h;
  const std::string header = std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                             ":" + std::string(imaging::to_string(img.format())) + ":";
  h.update(header);
  h.update(img.samples());
  return h.hex();
}

std::string BackboneParams::to_json() const {
  json j;
  j["layer_count"] = layer_count;
  j["erosion_radius"] = erosion_radius;
  j["stroke_width"] = stroke_width;
  j["skeleton_only"] = skeleton_only;
  j["drop_background"] = drop_background;
  j["reference_resolution"] = reference_resolution;
  j["vectorize"] = {{"colors", vectorize.colors},
                    {"min_area", vectorize.min_area},
                    {"epsilon", vectorize.epsilon},
                    {"reference_resolution", vectorize.reference_resolution}};
  return j.dump();
}

}  // namespace ais::representations
