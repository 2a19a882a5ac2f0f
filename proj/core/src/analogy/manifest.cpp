#include "ais/analogy/manifest.hpp"

#include <nlohmann/json.hpp>
#include <set>

#include "ais/common/error.hpp"
#include "ais/common/files.hpp"

namespace ais::analogy {

using nlohmann::json;
namespace fs = std::filesystem;

std::string_view to_string(PairingMode mode) {
  return mode == PairingMode::disjoint ? "disjoint" : "all_pairs";
}

PairingMode parse_pairing_mode(std::string_view text) {
  if (text == "disjoint") return PairingMode::disjoint;
  if (text == "all_pairs") return PairingMode::all_pairs;
  throw InvalidInput("unknown pairing mode '" + std::string(text) + "'");
}

const Exemplar& StyleManifest::exemplar(std::string_view id) const {
  for (const auto& e : exemplars) {
    if (e.id == id) return e;
  }
  throw ManifestError("manifest '" + name + "' has no exemplar '" + std::string(id) + "'");
}

fs::path StyleManifest::resolve(const fs::path& p) const {
  return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
}

namespace {

template <typename T>
T get_as(const json& j, const char* key, std::string_view where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ManifestError(std::string(where) + ": field '" + key + "' is missing or mistyped");
  }
}

void apply_params(const json& p, PipelineParams& params) {
  if (!p.is_object()) throw ManifestError("params: expected an object");
  static const std::set<std::string> known{"panel_size", "layer_count",  "erosion_radius",
                                           "stroke_width", "colors",     "min_area",
                                           "epsilon",    "pairing",      "skeleton_only"};
  for (const auto& [key, _] : p.items()) {
    if (!known.count(key)) throw ManifestError("params: unknown key '" + key + "'");
  }
  try {
    if (p.contains("panel_size")) params.panel_size = p["panel_size"].get<int>();
    if (p.contains("layer_count")) params.backbone.layer_count = p["layer_count"].get<int>();
    if (p.contains("erosion_radius")) params.backbone.erosion_radius = p["erosion_radius"].get<int>();
    if (p.contains("stroke_width")) params.backbone.stroke_width = p["stroke_width"].get<double>();
    if (p.contains("skeleton_only")) params.backbone.skeleton_only = p["skeleton_only"].get<bool>();
    if (p.contains("colors")) params.proxy.colors = p["colors"].get<int>();
    if (p.contains("min_area")) params.proxy.min_area = p["min_area"].get<int>();
    if (p.contains("epsilon")) params.proxy.epsilon = p["epsilon"].get<double>();
    if (p.contains("pairing")) params.pairing = parse_pairing_mode(p["pairing"].get<std::string>());
  } catch (const json::exception& e) {
    throw ManifestError(std::string("params: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ManifestError(std::string("params: ") + e.what());
  }
  params.backbone.vectorize = params.proxy;
  if (params.panel_size < 64) throw ManifestError("params.panel_size must be >= 64");
  if (params.backbone.layer_count < 1) throw ManifestError("params.layer_count must be >= 1");
  if (params.backbone.erosion_radius < 0) throw ManifestError("params.erosion_radius must be >= 0");
  if (params.proxy.colors < 1) throw ManifestError("params.colors must be >= 1");
  if (params.proxy.min_area < 1) throw ManifestError("params.min_area must be >= 1");
  if (params.proxy.epsilon < 0) throw ManifestError("params.epsilon must be >= 0");
}

json params_to_json(const PipelineParams& p) {
  return {{"panel_size", p.panel_size},
          {"layer_count", p.backbone.layer_count},
          {"erosion_radius", p.backbone.erosion_radius},
          {"stroke_width", p.backbone.stroke_width},
          {"skeleton_only", p.backbone.skeleton_only},
          {"colors", p.proxy.colors},
          {"min_area", p.proxy.min_area},
          {"epsilon", p.proxy.epsilon},
          {"pairing", std::string(to_string(p.pairing))}};
}

}  // namespace

void apply_params_json(std::string_view json_text, PipelineParams& params) {
  json p;
  try {
    p = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ManifestError(std::string("params: ") + e.what());
  }
  apply_params(p, params);
}

StyleManifest parse_manifest(std::string_view json_text, const fs::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ManifestError("manifest: expected a JSON object");

  StyleManifest m;
  m.base_dir = base_dir;
  m.name = get_as<std::string>(doc, "name", "manifest");
  m.styvec = get_as<std::string>(doc, "styvec", "manifest");
  if (m.name.empty()) throw ManifestError("manifest: name must not be empty");
  if (m.styvec.empty() || m.styvec.find('\n') != std::string::npos) {
    throw ManifestError("manifest: styvec must be a non-empty single line");
  }
  if (doc.contains("params")) apply_params(doc["params"], m.params);
  m.params.backbone.vectorize = m.params.proxy;

  if (!doc.contains("exemplars") || !doc["exemplars"].is_array()) {
    throw ManifestError("manifest: 'exemplars' must be an array");
  }
  std::set<std::string> seen;
  for (const auto& e : doc["exemplars"]) {
    Exemplar ex;
    ex.id = get_as<std::string>(e, "id", "exemplar");
    ex.image = get_as<std::string>(e, "image", "exemplar '" + ex.id + "'");
    if (ex.id.empty()) throw ManifestError("exemplar id must not be empty");
    if (ex.id.find_first_of("/\\ \n") != std::string::npos) {
      throw ManifestError("exemplar id '" + ex.id + "' must not contain path separators or spaces");
    }
    if (e.contains("proxy")) ex.proxy = fs::path(get_as<std::string>(e, "proxy", ex.id));
    if (e.contains("backbone")) ex.backbone = fs::path(get_as<std::string>(e, "backbone", ex.id));
    if (!seen.insert(ex.id).second) throw ManifestError("duplicate exemplar id '" + ex.id + "'");
    m.exemplars.push_back(std::move(ex));
  }
  if (m.exemplars.size() < 2) {
    throw ManifestError("manifest: a style needs at least 2 exemplars, found " +
                        std::to_string(m.exemplars.size()));
  }

  if (doc.contains("adapters")) {
    const auto& a = doc["adapters"];
    if (!a.is_object()) throw ManifestError("manifest: 'adapters' must be an object");
    if (a.contains("avat")) m.adapters.avat = get_as<std::string>(a, "avat", "adapters");
    if (a.contains("svat")) m.adapters.svat = get_as<std::string>(a, "svat", "adapters");
    if (a.contains("asvat")) m.adapters.asvat = get_as<std::string>(a, "asvat", "adapters");
  }
  return m;
}

StyleManifest load_manifest(const fs::path& path) {
  std::string text;
  try {
    text = read_text(path);
  } catch (const InvalidInput& e) {
    throw ManifestError(e.what());
  }
  return parse_manifest(text, path.parent_path());
}

std::string manifest_to_json(const StyleManifest& m) {
  json doc;
  doc["name"] = m.name;
  doc["styvec"] = m.styvec;
  doc["params"] = params_to_json(m.params);
  doc["exemplars"] = json::array();
  for (const auto& e : m.exemplars) {
    json j = {{"id", e.id}, {"image", e.image.generic_string()}};
    if (e.proxy) j["proxy"] = e.proxy->generic_string();
    if (e.backbone) j["backbone"] = e.backbone->generic_string();
    doc["exemplars"].push_back(j);
  }
  json adapters = json::object();
  if (m.adapters.avat) adapters["avat"] = *m.adapters.avat;
  if (m.adapters.svat) adapters["svat"] = *m.adapters.svat;
  if (m.adapters.asvat) adapters["asvat"] = *m.adapters.asvat;
  doc["adapters"] = adapters;
  return doc.dump(2) + "\n";
}

}  // namespace ais::analogy
