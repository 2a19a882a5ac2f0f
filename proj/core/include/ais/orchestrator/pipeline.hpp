#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ais/analogy/manifest.hpp"
#include "ais/analogy/trainset.hpp"
#include "ais/backend/protocol.hpp"
#include "ais/common/files.hpp"
#include "ais/representations/representations.hpp"

namespace ais::orchestrator {

namespace fs = std::filesystem;
using imaging::RasterImage;

/// Pads an input image to a white square; every representation is built on
/// the padded image.
RasterImage prepare_input(const RasterImage& img);

/// Writes `png` and its sidecar `{stem}.json`; returns whether the PNG changed.
WriteResult write_artifact(const fs::path& png, const RasterImage& img,
                           std::string_view sidecar_json);

/// Sidecar path for an artifact PNG.
fs::path sidecar_path(const fs::path& png);

WriteResult cmd_backbone(const fs::path& input, const fs::path& output,
                         const representations::BackboneParams& params);

WriteResult cmd_proxy(const fs::path& input, const fs::path& output,
                      const vectorizer::VectorizeParams& params,
                      representations::ProxyAblation mode =
                          representations::ProxyAblation::vector_simplification_only);

struct PanelNeeds {
  bool backbone = false;
  bool proxy = false;
  bool output = false;
  representations::ProxyAblation proxy_mode =
      representations::ProxyAblation::vector_simplification_only;
  bool skeleton_only = false;
};

PanelNeeds needs_for(analogy::SampleKind kind);

/// Loads the manifest-supplied representations and computes the missing
/// ones. With `save_dir`, computed panels are persisted there as
/// {id}_backbone.png / {id}_proxy.png with sidecars.
analogy::PanelSet build_panels(const analogy::StyleManifest& manifest, const PanelNeeds& needs,
                               const std::optional<fs::path>& save_dir = std::nullopt,
                               const std::vector<std::string>& only_ids = {});

struct TrainsetOptions {
  analogy::SampleKind kind = analogy::SampleKind::avat;
  std::optional<analogy::PairingMode> mode;  // manifest pairing when unset
  std::optional<std::size_t> cap;
  representations::ProxyAblation proxy_mode =
      representations::ProxyAblation::vector_simplification_only;
  bool skeleton_only = false;
};

std::vector<analogy::TrainingSample> make_trainset(const analogy::StyleManifest& manifest,
                                                   const TrainsetOptions& options,
                                                   const std::optional<fs::path>& save_dir = {});

/// Writes {style}_{kind}_{r1}_{r2}.png/.txt under out_dir, plus the computed
/// representations under out_dir/representations.
analogy::WriteSummary cmd_trainset(const analogy::StyleManifest& manifest,
                                   const TrainsetOptions& options, const fs::path& out_dir);

/// Adapter kind trained from a sample kind (layout_1x2 trains an svat).
backend::AdapterKind adapter_kind_for(analogy::SampleKind kind);

backend::AdapterRef cmd_train(backend::Backend& backend, const analogy::StyleManifest& manifest,
                              const TrainsetOptions& options,
                              const backend::AdapterConfig& config = {});

enum class InferAblation {
  off,            // Backbone -> Proxy -> Output
  none,           // raw target stands in for its proxy; stage 2 only
  vec,            // vector-simplified target as proxy; stage 2 only
  color,          // flat-colour proxies on both rows; stage 2 only
  skeleton_only,  // backbones without eroded residuals
  asvat,          // single Backbone -> Output stage
  layout_1x2,     // stage 2 on a Proxy_t | MASK canvas
};
std::string_view to_string(InferAblation mode);
InferAblation parse_infer_ablation(std::string_view text);

struct InferOptions {
  std::optional<std::string> avat_id;
  std::optional<std::string> svat_id;
  std::optional<std::string> asvat_id;
  std::uint64_t seed = 0;
  int samples = 1;
  InferAblation ablation = InferAblation::off;
  std::optional<std::string> ref_exemplar;  // first exemplar when unset
  fs::path out_dir = ".";
  std::string run_name;  // target file stem when empty
};

struct StageRecord {
  std::string name;  // "stage1", "stage2" or "asvat"
  std::string adapter_id;
  std::string job_id;
  std::uint64_t seed = 0;
  analogy::AnalogyGrid grid;             // masked input
  std::vector<RasterImage> canvases;     // completed canvases, one per sample
};

struct InferResult {
  RasterImage target;    // square-padded input
  RasterImage backbone;  // target backbone (empty when skipped)
  RasterImage proxy;     // Proxy_t fed to stage 2 (or the asvat input)
  RasterImage output;    // first sample
  std::vector<RasterImage> candidates;
  std::vector<StageRecord> stages;
  std::string ref_exemplar;
  fs::path run_dir;
};

/// Two-stage analogy inference with every intermediate and a run.json
/// written under out_dir/run_name. Errors carry the failing stage.
InferResult cmd_infer(backend::Backend& backend, const analogy::StyleManifest& manifest,
                      const fs::path& target, const InferOptions& options);

/// In-memory variant used by cmd_infer; writes nothing.
InferResult infer_image(backend::Backend& backend, const analogy::StyleManifest& manifest,
                        const RasterImage& target, const InferOptions& options);

struct StyledAdapter {
  const analogy::StyleManifest* style = nullptr;
  std::string id;
};

struct MixOutput {
  std::string avat_id;
  std::string svat_id;
  fs::path path;
  RasterImage proxy;
  RasterImage output;
};

/// Every avat x svat combination on one target. Stage 1 runs once per avat;
/// outputs are named {target}__avat-{id}__svat-{id}.png.
std::vector<MixOutput> cmd_mix(backend::Backend& backend, const fs::path& target,
                               const std::vector<StyledAdapter>& avats,
                               const std::vector<StyledAdapter>& svats, std::uint64_t seed,
                               const fs::path& out_dir,
                               const std::optional<std::string>& ref_exemplar = std::nullopt);

/// Throws PermanentError unless `id` names a ready adapter of `kind`.
backend::AdapterRef require_adapter(backend::Backend& backend, std::string_view id,
                                    backend::AdapterKind kind);

}  // namespace ais::orchestrator
