#include "ais/analogy/trainset.hpp"

#include <set>

#include "ais/analogy/prompt.hpp"
#include "ais/common/error.hpp"
#include "ais/common/files.hpp"
#include "ais/imaging/png_io.hpp"

namespace ais::analogy {

std::string_view to_string(SampleKind kind) {
  switch (kind) {
    case SampleKind::avat: return "avat";
    case SampleKind::svat: return "svat";
    case SampleKind::asvat: return "asvat";
    case SampleKind::layout_1x2: return "layout_1x2";
  }
  return "?";
}

SampleKind parse_sample_kind(std::string_view text) {
  if (text == "avat") return SampleKind::avat;
  if (text == "svat") return SampleKind::svat;
  if (text == "asvat") return SampleKind::asvat;
  if (text == "layout_1x2" || text == "1x2") return SampleKind::layout_1x2;
  throw InvalidInput("unknown sample kind '" + std::string(text) + "'");
}

std::string TrainingSample::file_stem(std::string_view style) const {
  std::string stem = std::string(style) + "_" + std::string(to_string(kind)) + "_" + pair.r1;
  if (!pair.r2.empty()) stem += "_" + pair.r2;
  return stem;
}

namespace {

using Slot = std::optional<RasterImage> ExemplarPanels::*;

struct RowSpec {
  Slot left;
  Slot right;
  const char* left_name;
  const char* right_name;
};

RowSpec row_spec(SampleKind kind) {
  switch (kind) {
    case SampleKind::avat:
      return {&ExemplarPanels::backbone, &ExemplarPanels::proxy, "backbone", "proxy"};
    case SampleKind::svat:
    case SampleKind::layout_1x2:
      return {&ExemplarPanels::proxy, &ExemplarPanels::output, "proxy", "output"};
    case SampleKind::asvat:
      return {&ExemplarPanels::backbone, &ExemplarPanels::output, "backbone", "output"};
  }
  throw InvalidInput("unknown sample kind");
}

}  // namespace

std::vector<TrainingSample> build_trainset(const StyleManifest& manifest, const PanelSet& panels,
                                           SampleKind kind, PairingMode mode,
                                           std::optional<std::size_t> cap) {
  const RowSpec spec = row_spec(kind);

  std::vector<ExemplarPair> work;
  if (kind == SampleKind::layout_1x2) {
    for (const auto& e : manifest.exemplars) work.push_back({e.id, {}});
    if (cap && work.size() > *cap) work.resize(*cap);
  } else {
    work = build_pairs(manifest, mode, cap);
  }

  std::set<std::string> used;
  for (const auto& p : work) {
    used.insert(p.r1);
    if (!p.r2.empty()) used.insert(p.r2);
  }
  std::string missing;
  for (const auto& e : manifest.exemplars) {
    if (!used.count(e.id)) continue;
    const auto it = panels.find(e.id);
    std::vector<std::string> lacks;
    if (it == panels.end() || !(it->second.*spec.left)) lacks.push_back(spec.left_name);
    if (it == panels.end() || !(it->second.*spec.right)) lacks.push_back(spec.right_name);
    for (const auto& what : lacks) {
      missing += (missing.empty() ? "" : ", ") + e.id + " (" + what + ")";
    }
  }
  if (!missing.empty()) {
    throw InvalidInput("build_trainset(" + std::string(to_string(kind)) +
                       "): missing representations for " + missing);
  }

  const std::string prompt = render_prompt(manifest.styvec);
  const int side = manifest.params.panel_size;
  std::vector<TrainingSample> samples;
  samples.reserve(work.size());
  for (const auto& pair : work) {
    const ExemplarPanels& first = panels.at(pair.r1);
    TrainingSample s;
    s.pair = pair;
    s.kind = kind;
    s.prompt = prompt;
    if (kind == SampleKind::layout_1x2) {
      s.grid = compose_row(*(first.*spec.left), *(first.*spec.right), side);
    } else {
      const ExemplarPanels& second = panels.at(pair.r2);
      s.grid = compose_grid(*(first.*spec.left), *(first.*spec.right), *(second.*spec.left),
                            *(second.*spec.right), side);
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

WriteSummary write_trainset(const std::vector<TrainingSample>& samples, std::string_view style,
                            const std::filesystem::path& dir) {
  WriteSummary summary;
  for (const auto& s : samples) {
    const std::string stem = s.file_stem(style);
    const auto png = dir / (stem + ".png");
    const auto txt = dir / (stem + ".txt");
    for (const auto& [path, result] :
         {std::pair{png, write_atomic(png, imaging::encode_png(s.grid.canvas))},
          std::pair{txt, write_atomic(txt, s.prompt)}}) {
      (result == WriteResult::written ? summary.written : summary.unchanged)++;
      summary.files.push_back(path);
    }
  }
  return summary;
}

}  // namespace ais::analogy
