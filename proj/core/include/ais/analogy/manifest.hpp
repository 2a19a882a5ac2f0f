#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ais/representations/representations.hpp"

namespace ais::analogy {

enum class PairingMode { disjoint, all_pairs };
std::string_view to_string(PairingMode mode);
PairingMode parse_pairing_mode(std::string_view text);

/// Pipeline parameters a style carries; every field has a CLI flag.
struct PipelineParams {
  int panel_size = 512;  // grid canvas is 2 * panel_size = 1024
  representations::BackboneParams backbone;
  vectorizer::VectorizeParams proxy;
  PairingMode pairing = PairingMode::disjoint;
};

struct Exemplar {
  std::string id;
  std::filesystem::path image;
  std::optional<std::filesystem::path> proxy;
  std::optional<std::filesystem::path> backbone;
};

struct AdapterIds {
  std::optional<std::string> avat;
  std::optional<std::string> svat;
  std::optional<std::string> asvat;
};

/// One reference style: N >= 2 exemplars with unique ids and a styvec token.
struct StyleManifest {
  std::string name;
  std::string styvec;
  std::vector<Exemplar> exemplars;
  PipelineParams params;
  AdapterIds adapters;
  std::filesystem::path base_dir;  // relative paths resolve against this

  const Exemplar& exemplar(std::string_view id) const;
  std::filesystem::path resolve(const std::filesystem::path& p) const;
};

/// Parses and validates a manifest document. Throws ManifestError.
StyleManifest parse_manifest(std::string_view json_text,
                             const std::filesystem::path& base_dir = {});
StyleManifest load_manifest(const std::filesystem::path& path);
std::string manifest_to_json(const StyleManifest& manifest);

/// Reads {panel_size, layer_count, erosion_radius, stroke_width, colors,
/// min_area, epsilon, pairing} over `params`; unknown keys are rejected.
void apply_params_json(std::string_view json_text, PipelineParams& params);

}  // namespace ais::analogy
