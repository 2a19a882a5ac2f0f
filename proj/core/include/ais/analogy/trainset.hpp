#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ais/analogy/grid.hpp"
#include "ais/analogy/manifest.hpp"
#include "ais/analogy/pairs.hpp"

namespace ais::analogy {

enum class SampleKind {
  avat,        // Backbone -> Proxy
  svat,        // Proxy -> Output
  asvat,       // Backbone -> Output (single-stage ablation)
  layout_1x2,  // Proxy -> Output, one exemplar per 1x2 canvas
};
std::string_view to_string(SampleKind kind);
SampleKind parse_sample_kind(std::string_view text);

/// Per-exemplar panels. `output` is the exemplar artwork itself.
struct ExemplarPanels {
  std::optional<RasterImage> backbone;
  std::optional<RasterImage> proxy;
  std::optional<RasterImage> output;
};
using PanelSet = std::map<std::string, ExemplarPanels>;

struct TrainingSample {
  AnalogyGrid grid;
  std::string prompt;
  ExemplarPair pair;  // layout_1x2 samples leave r2 empty
  SampleKind kind = SampleKind::avat;

  /// {style}_{kind}_{r1}_{r2}, or {style}_layout_1x2_{r1}.
  std::string file_stem(std::string_view style) const;
};

/// Composes one sample per pair (per exemplar for layout_1x2, manifest order,
/// truncated by `cap`). Throws InvalidInput naming every exemplar that lacks
/// a panel the kind needs.
std::vector<TrainingSample> build_trainset(const StyleManifest& manifest, const PanelSet& panels,
                                           SampleKind kind, PairingMode mode,
                                           std::optional<std::size_t> cap = std::nullopt);

struct WriteSummary {
  std::size_t written = 0;
  std::size_t unchanged = 0;
  std::vector<std::filesystem::path> files;
};

/// Writes {stem}.png and {stem}.txt per sample, atomically, skipping files
/// whose content is already identical.
WriteSummary write_trainset(const std::vector<TrainingSample>& samples, std::string_view style,
                            const std::filesystem::path& dir);

}  // namespace ais::analogy
