#include "ais/orchestrator/pipeline.hpp"

#include <chrono>
#include <nlohmann/json.hpp>
#include <thread>

#include "ais/analogy/prompt.hpp"
#include "ais/common/bounded.hpp"
#include "ais/common/error.hpp"
#include "ais/imaging/png_io.hpp"
#include "ais/imaging/resample.hpp"

namespace ais::orchestrator {

using analogy::AnalogyGrid;
using analogy::Quadrant;
using analogy::StyleManifest;
using backend::AdapterKind;
using nlohmann::json;
using representations::ProxyAblation;

namespace {

[[noreturn]] void rethrow_in(std::string_view stage, const Error& e) {
  const std::string msg = std::string(stage) + ": " + e.what();
  switch (e.kind()) {
    case ErrorKind::transport: throw TransportError(msg);
    case ErrorKind::permanent: throw PermanentError(msg);
    case ErrorKind::manifest: throw ManifestError(msg);
    case ErrorKind::invalid_input: break;
  }
  throw InvalidInput(msg);
}

std::size_t worker_count() {
  return std::max(1u, std::thread::hardware_concurrency());
}

RasterImage load_prepared(const fs::path& path) {
  return prepare_input(imaging::read_png(path));
}

std::string exemplar_extra(std::string_view style, std::string_view id) {
  return json{{"style", style}, {"exemplar", id}}.dump();
}

/// Reference exemplar id for the top grid row.
std::string reference_id(const StyleManifest& manifest, const std::optional<std::string>& ref) {
  if (!ref) return manifest.exemplars.front().id;
  for (const auto& e : manifest.exemplars) {
    if (e.id == *ref) return e.id;
  }
  throw InvalidInput("reference exemplar '" + *ref + "' is not in manifest '" + manifest.name +
                     "'");
}

StageRecord run_stage(backend::Backend& backend, std::string name, AnalogyGrid grid,
                      const std::string& adapter_id, const std::string& prompt,
                      std::uint64_t seed, int samples, const std::string& job_prefix) {
  StageRecord rec;
  rec.name = std::move(name);
  rec.adapter_id = adapter_id;
  rec.job_id = job_prefix + "/" + rec.name;
  rec.seed = seed;
  rec.grid = std::move(grid);
  try {
    backend::InpaintJob job;
    job.grid = rec.grid;
    job.mask = analogy::inference_mask(rec.grid);
    job.prompt = prompt;
    job.adapter_id = adapter_id;
    job.seed = seed;
    job.samples = samples;
    job.job_id = rec.job_id;
    rec.canvases = backend::inpaint_checked(backend, job).images;
  } catch (const Error& e) {
    rethrow_in(rec.name, e);
  }
  return rec;
}

Quadrant answer_panel(const AnalogyGrid& grid) {
  return grid.layout == analogy::Layout::row_1x2 ? Quadrant::top_right : Quadrant::bottom_right;
}

struct StageOne {
  RasterImage backbone;
  RasterImage proxy;
  StageRecord record;
};

representations::BackboneParams backbone_params(const StyleManifest& style, bool skeleton_only) {
  auto p = style.params.backbone;
  p.skeleton_only = p.skeleton_only || skeleton_only;
  return p;
}

StageOne stage_one(backend::Backend& backend, const StyleManifest& style,
                   const RasterImage& target, const std::string& avat_id,
                   const std::string& ref_id, std::uint64_t seed, bool skeleton_only,
                   const std::string& job_prefix) {
  PanelNeeds needs;
  needs.backbone = needs.proxy = true;
  needs.skeleton_only = skeleton_only;
  const auto ref = build_panels(style, needs, std::nullopt, {ref_id}).at(ref_id);

  StageOne out;
  try {
    out.backbone =
        representations::build_backbone(target, backbone_params(style, skeleton_only)).image.to_raster();
  } catch (const Error& e) {
    rethrow_in("stage1 target backbone", e);
  }
  const int panel = style.params.panel_size;
  out.record = run_stage(backend, "stage1",
                         analogy::compose_grid(*ref.backbone, *ref.proxy, out.backbone,
                                               std::nullopt, panel),
                         avat_id, analogy::render_prompt(style.styvec), seed, 1, job_prefix);
  out.proxy = analogy::extract_panel(
      AnalogyGrid::from_canvas(out.record.canvases.front(), out.record.grid.layout),
      Quadrant::bottom_right);
  return out;
}

StageRecord stage_two(backend::Backend& backend, const StyleManifest& style,
                      const RasterImage& proxy_t, const std::string& svat_id,
                      const std::string& ref_id, std::uint64_t seed, int samples,
                      InferAblation ablation, const std::string& job_prefix) {
  const int panel = style.params.panel_size;
  const std::string prompt = analogy::render_prompt(style.styvec);
  if (ablation == InferAblation::layout_1x2) {
    return run_stage(backend, "stage2", analogy::compose_row(proxy_t, std::nullopt, panel),
                     svat_id, prompt, seed, samples, job_prefix);
  }
  PanelNeeds needs;
  needs.proxy = needs.output = true;
  if (ablation == InferAblation::color) needs.proxy_mode = ProxyAblation::color;
  const auto ref = build_panels(style, needs, std::nullopt, {ref_id}).at(ref_id);
  return run_stage(backend, "stage2",
                   analogy::compose_grid(*ref.proxy, *ref.output, proxy_t, std::nullopt, panel),
                   svat_id, prompt, seed, samples, job_prefix);
}

std::vector<RasterImage> answers(const StageRecord& rec) {
  std::vector<RasterImage> out;
  for (const auto& canvas : rec.canvases) {
    out.push_back(analogy::extract_panel(AnalogyGrid::from_canvas(canvas, rec.grid.layout),
                                         answer_panel(rec.grid)));
  }
  return out;
}

const std::string& required(const std::optional<std::string>& id, std::string_view what) {
  if (!id || id->empty()) {
    throw InvalidInput("no " + std::string(what) + " adapter: pass --" + std::string(what) +
                       " or set it in the manifest");
  }
  return *id;
}

std::string sanitize(std::string_view s) {
  std::string out;
  for (const char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out;
}

}  // namespace

RasterImage prepare_input(const RasterImage& img) {
  if (img.empty()) throw InvalidInput("empty input image");
  return imaging::pad_to_square(img.format() == imaging::PixelFormat::binary ? imaging::to_rgb(img)
                                                                             : img);
}

fs::path sidecar_path(const fs::path& png) {
  fs::path p = png;
  p.replace_extension(".json");
  return p;
}

WriteResult write_artifact(const fs::path& png, const RasterImage& img,
                           std::string_view sidecar_json) {
  if (png.has_parent_path()) fs::create_directories(png.parent_path());
  const auto bytes = imaging::encode_png(img);
  const WriteResult r = write_atomic(png, bytes);
  write_atomic(sidecar_path(png), sidecar_json);
  return r;
}

WriteResult cmd_backbone(const fs::path& input, const fs::path& output,
                         const representations::BackboneParams& params) {
  const auto bb = representations::build_backbone(load_prepared(input), params,
                                                  representations::Role::target, input.string());
  return write_artifact(output, bb.image.to_raster(), bb.source.to_json("backbone"));
}

WriteResult cmd_proxy(const fs::path& input, const fs::path& output,
                      const vectorizer::VectorizeParams& params, ProxyAblation mode) {
  const RasterImage img = load_prepared(input);
  representations::Provenance prov;
  prov.input = input.string();
  prov.content_sha256 = representations::image_sha256(img);
  prov.params_json = json{{"colors", params.colors},
                          {"min_area", params.min_area},
                          {"epsilon", params.epsilon},
                          {"reference_resolution", params.reference_resolution},
                          {"mode", to_string(mode)}}
                         .dump();
  return write_artifact(output, representations::ablation_proxy(img, mode, params),
                        prov.to_json("proxy"));
}

PanelNeeds needs_for(analogy::SampleKind kind) {
  PanelNeeds n;
  switch (kind) {
    case analogy::SampleKind::avat: n.backbone = n.proxy = true; break;
    case analogy::SampleKind::svat:
    case analogy::SampleKind::layout_1x2: n.proxy = n.output = true; break;
    case analogy::SampleKind::asvat: n.backbone = n.output = true; break;
  }
  return n;
}

analogy::PanelSet build_panels(const StyleManifest& manifest, const PanelNeeds& needs,
                               const std::optional<fs::path>& save_dir,
                               const std::vector<std::string>& only_ids) {
  std::vector<const analogy::Exemplar*> todo;
  for (const auto& e : manifest.exemplars) {
    if (only_ids.empty() || std::find(only_ids.begin(), only_ids.end(), e.id) != only_ids.end()) {
      todo.push_back(&e);
    }
  }
  const auto bb_params = backbone_params(manifest, needs.skeleton_only);
  const bool stock_proxy = needs.proxy_mode == ProxyAblation::vector_simplification_only;

  std::vector<analogy::ExemplarPanels> panels(todo.size());
  run_bounded(todo.size(), worker_count(), [&](std::size_t i) {
    const analogy::Exemplar& ex = *todo[i];
    const fs::path image_path = manifest.resolve(ex.image);
    RasterImage image;
    try {
      image = load_prepared(image_path);
    } catch (const Error& e) {
      rethrow_in("exemplar '" + ex.id + "'", e);
    }
    auto& out = panels[i];
    if (needs.output) out.output = image;
    if (needs.backbone) {
      if (ex.backbone && !needs.skeleton_only) {
        out.backbone = imaging::read_png(manifest.resolve(*ex.backbone));
      } else {
        try {
          const auto bb = representations::build_backbone(
              image, bb_params, representations::Role::reference, image_path.string());
          out.backbone = bb.image.to_raster();
          if (save_dir) {
            write_artifact(*save_dir / (ex.id + "_backbone.png"), *out.backbone,
                           bb.source.to_json("backbone", exemplar_extra(manifest.name, ex.id)));
          }
        } catch (const Error& e) {
          rethrow_in("exemplar '" + ex.id + "' backbone", e);
        }
      }
    }
    if (needs.proxy) {
      if (ex.proxy && stock_proxy) {
        out.proxy = imaging::read_png(manifest.resolve(*ex.proxy));
      } else {
        try {
          out.proxy = representations::ablation_proxy(image, needs.proxy_mode, manifest.params.proxy);
        } catch (const Error& e) {
          rethrow_in("exemplar '" + ex.id + "' proxy", e);
        }
        if (save_dir) {
          representations::Provenance prov;
          prov.input = image_path.string();
          prov.content_sha256 = representations::image_sha256(image);
          prov.params_json = json{{"mode", to_string(needs.proxy_mode)},
                                  {"colors", manifest.params.proxy.colors},
                                  {"min_area", manifest.params.proxy.min_area},
                                  {"epsilon", manifest.params.proxy.epsilon}}
                                 .dump();
          write_artifact(*save_dir / (ex.id + "_proxy.png"), *out.proxy,
                         prov.to_json("proxy", exemplar_extra(manifest.name, ex.id)));
        }
      }
    }
  });

  analogy::PanelSet set;
  for (std::size_t i = 0; i < todo.size(); ++i) set.emplace(todo[i]->id, std::move(panels[i]));
  return set;
}

std::vector<analogy::TrainingSample> make_trainset(const StyleManifest& manifest,
                                                   const TrainsetOptions& options,
                                                   const std::optional<fs::path>& save_dir) {
  PanelNeeds needs = needs_for(options.kind);
  needs.proxy_mode = options.proxy_mode;
  needs.skeleton_only = options.skeleton_only;
  const auto panels = build_panels(manifest, needs, save_dir);
  return analogy::build_trainset(manifest, panels, options.kind,
                                 options.mode.value_or(manifest.params.pairing), options.cap);
}

analogy::WriteSummary cmd_trainset(const StyleManifest& manifest, const TrainsetOptions& options,
                                   const fs::path& out_dir) {
  const auto samples = make_trainset(manifest, options, out_dir / "representations");
  return analogy::write_trainset(samples, manifest.name, out_dir);
}

AdapterKind adapter_kind_for(analogy::SampleKind kind) {
  switch (kind) {
    case analogy::SampleKind::avat: return AdapterKind::avat;
    case analogy::SampleKind::asvat: return AdapterKind::asvat;
    case analogy::SampleKind::svat:
    case analogy::SampleKind::layout_1x2: return AdapterKind::svat;
  }
  return AdapterKind::svat;
}

backend::AdapterRef cmd_train(backend::Backend& backend, const StyleManifest& manifest,
                              const TrainsetOptions& options,
                              const backend::AdapterConfig& config) {
  backend::TrainJob job;
  job.kind = adapter_kind_for(options.kind);
  job.config = config;
  for (auto& s : make_trainset(manifest, options)) {
    job.samples.push_back({std::move(s.grid.canvas), std::move(s.prompt)});
  }
  backend::require_compatible(backend);
  backend::AdapterRef ref = backend.submit_train(job);
  while (ref.status == backend::AdapterStatus::pending) {
    std::this_thread::sleep_for(std::chrono::seconds(2));
    ref = backend.get_adapter(ref.id);
  }
  if (ref.status == backend::AdapterStatus::failed) {
    throw PermanentError("training of adapter '" + ref.id + "' failed");
  }
  return ref;
}

std::string_view to_string(InferAblation mode) {
  switch (mode) {
    case InferAblation::off: return "off";
    case InferAblation::none: return "none";
    case InferAblation::vec: return "vec";
    case InferAblation::color: return "color";
    case InferAblation::skeleton_only: return "skeleton-only";
    case InferAblation::asvat: return "asvat";
    case InferAblation::layout_1x2: return "layout-1x2";
  }
  return "?";
}

InferAblation parse_infer_ablation(std::string_view text) {
  for (const auto m : {InferAblation::off, InferAblation::none, InferAblation::vec,
                       InferAblation::color, InferAblation::skeleton_only, InferAblation::asvat,
                       InferAblation::layout_1x2}) {
    if (text == to_string(m)) return m;
  }
  if (text == "skeleton_only") return InferAblation::skeleton_only;
  if (text == "layout_1x2" || text == "1x2") return InferAblation::layout_1x2;
  throw InvalidInput("unknown ablation '" + std::string(text) +
                     "' (off, none, vec, color, skeleton-only, asvat, layout-1x2)");
}

backend::AdapterRef require_adapter(backend::Backend& backend, std::string_view id,
                                    AdapterKind kind) {
  const backend::AdapterRef ref = backend.get_adapter(id);
  if (ref.kind != kind) {
    throw PermanentError("adapter '" + std::string(id) + "' is an " +
                         std::string(to_string(ref.kind)) + " adapter, expected " +
                         std::string(to_string(kind)));
  }
  if (ref.status != backend::AdapterStatus::ready) {
    throw PermanentError("adapter '" + std::string(id) + "' is " +
                         std::string(to_string(ref.status)));
  }
  return ref;
}

InferResult infer_image(backend::Backend& backend, const StyleManifest& manifest,
                        const RasterImage& target, const InferOptions& options) {
  if (options.samples < 1) throw InvalidInput("samples must be >= 1");
  InferResult result;
  result.target = prepare_input(target);
  result.ref_exemplar = reference_id(manifest, options.ref_exemplar);
  const std::string job_prefix = options.run_name.empty() ? "run" : options.run_name;
  const InferAblation mode = options.ablation;

  backend::require_compatible(backend);
  StageRecord final_stage;
  if (mode == InferAblation::asvat) {
    const auto& id = required(options.asvat_id, "asvat");
    require_adapter(backend, id, AdapterKind::asvat);
    PanelNeeds needs;
    needs.backbone = needs.output = true;
    const auto ref = build_panels(manifest, needs, std::nullopt, {result.ref_exemplar})
                         .at(result.ref_exemplar);
    try {
      result.backbone =
          representations::build_backbone(result.target, manifest.params.backbone).image.to_raster();
    } catch (const Error& e) {
      rethrow_in("asvat target backbone", e);
    }
    result.proxy = result.backbone;
    final_stage = run_stage(backend, "asvat",
                            analogy::compose_grid(*ref.backbone, *ref.output, result.backbone,
                                                  std::nullopt, manifest.params.panel_size),
                            id, analogy::render_prompt(manifest.styvec), options.seed,
                            options.samples, job_prefix);
  } else {
    const auto& svat = required(options.svat_id, "svat");
    const bool two_stage = mode == InferAblation::off || mode == InferAblation::skeleton_only ||
                           mode == InferAblation::layout_1x2;
    if (two_stage) {
      const auto& avat = required(options.avat_id, "avat");
      require_adapter(backend, avat, AdapterKind::avat);
      require_adapter(backend, svat, AdapterKind::svat);
      StageOne one = stage_one(backend, manifest, result.target, avat, result.ref_exemplar,
                               options.seed, mode == InferAblation::skeleton_only, job_prefix);
      result.backbone = std::move(one.backbone);
      result.proxy = std::move(one.proxy);
      result.stages.push_back(std::move(one.record));
    } else {
      require_adapter(backend, svat, AdapterKind::svat);
      const ProxyAblation pm = mode == InferAblation::none  ? ProxyAblation::none
                               : mode == InferAblation::vec ? ProxyAblation::vector_simplification_only
                                                            : ProxyAblation::color;
      try {
        result.proxy = representations::ablation_proxy(result.target, pm, manifest.params.proxy);
      } catch (const Error& e) {
        rethrow_in("target proxy", e);
      }
    }
    final_stage = stage_two(backend, manifest, result.proxy, svat, result.ref_exemplar,
                            options.seed, options.samples, mode, job_prefix);
  }
  result.candidates = answers(final_stage);
  result.output = result.candidates.front();
  result.stages.push_back(std::move(final_stage));
  return result;
}

InferResult cmd_infer(backend::Backend& backend, const StyleManifest& manifest,
                      const fs::path& target, const InferOptions& options) {
  InferOptions opts = options;
  if (opts.run_name.empty()) opts.run_name = sanitize(target.stem().string());
  const auto t0 = std::chrono::steady_clock::now();
  InferResult result = infer_image(backend, manifest, imaging::read_png(target), opts);
  const auto t1 = std::chrono::steady_clock::now();

  result.run_dir = opts.out_dir / opts.run_name;
  const fs::path& dir = result.run_dir;
  fs::create_directories(dir);

  const std::string target_sha = representations::image_sha256(result.target);
  auto sidecar = [&](std::string_view kind, const json& extra) {
    representations::Provenance prov;
    prov.input = target.string();
    prov.content_sha256 = target_sha;
    prov.params_json = manifest_to_json(manifest);
    return prov.to_json(kind, extra.dump());
  };

  json outputs = json::object();
  write_atomic(dir / "target.png", imaging::encode_png(result.target));
  outputs["target"] = "target.png";
  if (!result.backbone.empty()) {
    write_artifact(dir / "backbone.png", result.backbone,
                   sidecar("backbone", {{"ablation", to_string(opts.ablation)}}));
    outputs["backbone"] = "backbone.png";
  }
  write_artifact(dir / "proxy.png", result.proxy,
                 sidecar("proxy", {{"ablation", to_string(opts.ablation)}}));
  outputs["proxy"] = "proxy.png";

  json stages = json::array();
  for (const auto& st : result.stages) {
    write_atomic(dir / (st.name + "_grid.png"), imaging::encode_png(st.grid.canvas));
    json canvases = json::array();
    for (std::size_t i = 0; i < st.canvases.size(); ++i) {
      const std::string name = st.name + "_canvas" + (i ? "_" + std::to_string(i) : "") + ".png";
      write_atomic(dir / name, imaging::encode_png(st.canvases[i]));
      canvases.push_back(name);
    }
    stages.push_back({{"name", st.name},
                      {"adapter_id", st.adapter_id},
                      {"job_id", st.job_id},
                      {"seed", st.seed},
                      {"layout", st.grid.layout == analogy::Layout::row_1x2 ? "1x2" : "2x2"},
                      {"grid", st.name + "_grid.png"},
                      {"canvases", canvases}});
  }

  json outs = json::array();
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    const std::string name = i == 0 ? "output.png" : "output_" + std::to_string(i) + ".png";
    write_artifact(dir / name, result.candidates[i],
                   sidecar("output", {{"sample", i}, {"seed", opts.seed}}));
    outs.push_back(name);
  }
  outputs["output"] = outs;

  json adapters = json::object();
  if (opts.avat_id) adapters["avat"] = *opts.avat_id;
  if (opts.svat_id) adapters["svat"] = *opts.svat_id;
  if (opts.asvat_id) adapters["asvat"] = *opts.asvat_id;
  const json run = {{"pipeline_version", representations::kPipelineVersion},
                    {"manifest", manifest.name},
                    {"target", target.string()},
                    {"target_sha256", target_sha},
                    {"ablation", to_string(opts.ablation)},
                    {"ref_exemplar", result.ref_exemplar},
                    {"seed", opts.seed},
                    {"samples", opts.samples},
                    {"panel_size", manifest.params.panel_size},
                    {"adapters", adapters},
                    {"stages", stages},
                    {"outputs", outputs},
                    {"params", json::parse(manifest_to_json(manifest))}};
  write_atomic(dir / "run.json", run.dump(2) + "\n");
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  write_atomic(dir / "timings.json", json{{"infer_ms", ms}}.dump(2) + "\n");
  return result;
}

std::vector<MixOutput> cmd_mix(backend::Backend& backend, const fs::path& target,
                               const std::vector<StyledAdapter>& avats,
                               const std::vector<StyledAdapter>& svats, std::uint64_t seed,
                               const fs::path& out_dir,
                               const std::optional<std::string>& ref_exemplar) {
  if (avats.empty() || svats.empty()) throw InvalidInput("mix needs at least one avat and one svat");
  for (const auto& a : avats) {
    if (!a.style) throw InvalidInput("avat '" + a.id + "' has no style manifest");
  }
  for (const auto& s : svats) {
    if (!s.style) throw InvalidInput("svat '" + s.id + "' has no style manifest");
  }
  backend::require_compatible(backend);
  for (const auto& a : avats) require_adapter(backend, a.id, AdapterKind::avat);
  for (const auto& s : svats) require_adapter(backend, s.id, AdapterKind::svat);

  const RasterImage img = prepare_input(imaging::read_png(target));
  const std::string stem = sanitize(target.stem().string());
  auto ref_for = [&](const StyleManifest& style) {
    if (ref_exemplar) {
      for (const auto& e : style.exemplars) {
        if (e.id == *ref_exemplar) return e.id;
      }
    }
    return style.exemplars.front().id;
  };

  fs::create_directories(out_dir);
  std::vector<MixOutput> outputs;
  for (const auto& a : avats) {
    const StageOne one = stage_one(backend, *a.style, img, a.id, ref_for(*a.style), seed, false,
                                   stem + "/" + a.id);
    for (const auto& s : svats) {
      const StageRecord two = stage_two(backend, *s.style, one.proxy, s.id, ref_for(*s.style),
                                        seed, 1, InferAblation::off, stem + "/" + a.id + "/" + s.id);
      MixOutput out;
      out.avat_id = a.id;
      out.svat_id = s.id;
      out.proxy = one.proxy;
      out.output = answers(two).front();
      out.path = out_dir / (stem + "__avat-" + sanitize(a.id) + "__svat-" + sanitize(s.id) + ".png");
      representations::Provenance prov;
      prov.input = target.string();
      prov.content_sha256 = representations::image_sha256(img);
      prov.params_json = json{{"avat", {{"id", a.id}, {"style", a.style->name}}},
                              {"svat", {{"id", s.id}, {"style", s.style->name}}},
                              {"seed", seed}}
                             .dump();
      write_artifact(out.path, out.output, prov.to_json("mix"));
      outputs.push_back(std::move(out));
    }
  }
  return outputs;
}

}  // namespace ais::orchestrator
