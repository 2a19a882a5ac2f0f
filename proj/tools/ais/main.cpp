#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ais/analogy/manifest.hpp"
#include "ais/backend/http_backend.hpp"
#include "ais/backend/mock_backend.hpp"
#include "ais/backend/mock_server.hpp"
#include "ais/common/error.hpp"
#include "ais/common/files.hpp"
#include "ais/imaging/binary_image.hpp"
#include "ais/imaging/png_io.hpp"
#include "ais/orchestrator/fixtures.hpp"
#include "ais/orchestrator/pipeline.hpp"
#include "ais/orchestrator/scenes.hpp"
#include "ais/orchestrator/structural.hpp"

namespace {

namespace fs = std::filesystem;
namespace orch = ais::orchestrator;
using nlohmann::json;

/// Flags shared by every command that builds representations.
struct ParamFlags {
  std::optional<int> panel_size;
  std::optional<int> erosion_radius;
  std::optional<int> layers;
  std::optional<double> stroke_width;
  std::optional<int> colors;
  std::optional<int> min_area;
  std::optional<double> epsilon;
  bool skeleton_only = false;

  void add(CLI::App* app) {
    app->add_option("--panel-size", panel_size, "Grid panel side in pixels");
    app->add_option("--erosion-radius", erosion_radius, "Erosion disk radius at 1024 px");
    app->add_option("--layers", layers, "Number of rearmost layers kept in the backbone");
    app->add_option("--stroke-width", stroke_width, "White stroke width of backbone renders");
    app->add_option("--colors", colors, "Quantization palette size");
    app->add_option("--min-area", min_area, "Smallest region kept, in pixels at 1024 px");
    app->add_option("--epsilon", epsilon, "Path simplification tolerance in pixels");
    app->add_flag("--skeleton-only", skeleton_only, "Backbones without eroded residuals");
  }

  void apply(ais::analogy::PipelineParams& p) const {
    if (panel_size) p.panel_size = *panel_size;
    if (erosion_radius) p.backbone.erosion_radius = *erosion_radius;
    if (layers) p.backbone.layer_count = *layers;
    if (stroke_width) p.backbone.stroke_width = *stroke_width;
    if (colors) p.proxy.colors = *colors;
    if (min_area) p.proxy.min_area = *min_area;
    if (epsilon) p.proxy.epsilon = *epsilon;
    if (skeleton_only) p.backbone.skeleton_only = true;
    p.backbone.vectorize = p.proxy;
  }
};

struct BackendFlags {
  std::string url;
  std::string mock_avat = "identity";
  std::string mock_svat = "identity";
  std::string mock_asvat = "identity";
  std::string mock_registry;

  void add(CLI::App* app) {
    app->add_option("--backend-url", url,
                    "http://host:port, or 'mock' for the in-process mock (env AIS_BACKEND_URL)");
    add_mock(app);
  }
  void add_mock(CLI::App* app) {
    app->add_option("--mock-avat", mock_avat, "Mock transform for avat adapters");
    app->add_option("--mock-svat", mock_svat, "Mock transform for svat adapters");
    app->add_option("--mock-asvat", mock_asvat, "Mock transform for asvat adapters");
    app->add_option("--mock-registry", mock_registry, "Adapter registry file of the mock");
  }

  bool is_mock() const { return resolved() == "mock"; }

  std::string resolved() const {
    if (!url.empty()) return url;
    if (const char* env = std::getenv("AIS_BACKEND_URL"); env && *env) return env;
    throw ais::InvalidInput("no backend: pass --backend-url or set AIS_BACKEND_URL");
  }

  ais::backend::MockOptions mock_options() const {
    ais::backend::MockOptions o;
    o.avat = ais::backend::MockTransform::parse(mock_avat);
    o.svat = ais::backend::MockTransform::parse(mock_svat);
    o.asvat = ais::backend::MockTransform::parse(mock_asvat);
    if (!mock_registry.empty()) o.registry_path = mock_registry;
    return o;
  }

  std::unique_ptr<ais::backend::Backend> make() const {
    if (is_mock()) return std::make_unique<ais::backend::MockBackend>(mock_options());
    return std::make_unique<ais::backend::HttpBackend>(resolved());
  }
};

ais::analogy::StyleManifest load_style(const std::string& path, const ParamFlags& flags) {
  if (path.empty()) throw ais::InvalidInput("--manifest is required");
  auto m = ais::analogy::load_manifest(path);
  flags.apply(m.params);
  return m;
}

/// Appends `--key value` for every config entry whose flag the chosen
/// subcommand accepts and the command line lacks; explicit flags win.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::optional<std::string> config_path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].starts_with("--config=")) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!config_path) return args;

  json cfg;
  try {
    cfg = json::parse(ais::read_text(*config_path));
  } catch (const json::exception& e) {
    throw ais::ManifestError("config '" + *config_path + "': " + e.what());
  }
  if (!cfg.is_object()) throw ais::ManifestError("config '" + *config_path + "' must be an object");
  std::set<std::string> present;
  CLI::App* sub = nullptr;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i].starts_with("--")) present.insert(args[i].substr(0, args[i].find('=')));
    if (!sub && !args[i].starts_with("-")) sub = app.get_subcommand_no_throw(args[i]);
  }
  if (!sub) return args;
  for (const auto& [key, value] : cfg.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (present.count(flag) || !sub->get_option_no_throw(flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      for (const auto& v : value) {
        args.push_back(flag);
        args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
    } else {
      args.push_back(flag);
      args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
  }
  return args;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

/// Splits "id@manifest.json"; the manifest defaults to `fallback`.
std::pair<std::string, std::string> split_adapter(const std::string& spec,
                                                  const std::string& fallback) {
  const auto at = spec.rfind('@');
  if (at == std::string::npos) return {spec, fallback};
  return {spec.substr(0, at), spec.substr(at + 1)};
}

int run(int argc, char** argv) {
  CLI::App app{"Abstraction-in-style pipeline toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ais 0.3.0");
  app.footer("--config FILE reads a JSON object whose keys mirror the long flags.");

  ParamFlags params;
  BackendFlags backend_flags;
  std::string manifest_path;
  std::string out;
  std::uint64_t seed = 0;

  // backbone
  auto* backbone = app.add_subcommand("backbone", "Build the hidden backbone of an image");
  std::string input;
  backbone->add_option("input", input, "Input PNG")->required()->check(CLI::ExistingFile);
  backbone->add_option("-o,--out", out, "Output PNG")->required();
  backbone->add_option("--manifest", manifest_path, "Take parameters from a style manifest");
  params.add(backbone);

  // proxy
  auto* proxy = app.add_subcommand("proxy", "Build the abstraction proxy of an image");
  std::string proxy_mode = "vec";
  proxy->add_option("input", input, "Input PNG")->required()->check(CLI::ExistingFile);
  proxy->add_option("-o,--out", out, "Output PNG")->required();
  proxy->add_option("--manifest", manifest_path, "Take parameters from a style manifest");
  proxy->add_option("--ablation", proxy_mode, "vec (default), color or none");
  params.add(proxy);

  // trainset
  auto* trainset = app.add_subcommand("trainset", "Write training grids and prompts");
  std::string kind = "avat";
  std::optional<std::string> pairing;
  std::optional<std::size_t> cap;
  std::string train_proxy = "vec";
  trainset->add_option("--manifest", manifest_path, "Style manifest")->required();
  trainset->add_option("--kind", kind, "avat, svat, asvat or layout_1x2");
  trainset->add_option("--mode", pairing, "Pairing: disjoint or all_pairs");
  trainset->add_option("--cap", cap, "At most this many samples");
  trainset->add_option("--proxy-mode", train_proxy, "Proxy flavour: vec or color");
  trainset->add_option("-o,--out", out, "Output directory")->required();
  params.add(trainset);

  // train
  auto* train = app.add_subcommand("train", "Train an adapter on a style");
  ais::backend::AdapterConfig config;
  train->add_option("--manifest", manifest_path, "Style manifest")->required();
  train->add_option("--kind", kind, "avat, svat, asvat or layout_1x2");
  train->add_option("--mode", pairing, "Pairing: disjoint or all_pairs");
  train->add_option("--cap", cap, "At most this many samples");
  train->add_option("--proxy-mode", train_proxy, "Proxy flavour: vec or color");
  train->add_option("--rank", config.rank, "Adapter rank");
  train->add_option("--steps", config.steps, "Training steps");
  params.add(train);
  backend_flags.add(train);

  // infer
  auto* infer = app.add_subcommand("infer", "Stylize a target with trained adapters");
  orch::InferOptions infer_opts;
  std::string target;
  std::string ablation = "off";
  infer->add_option("target", target, "Target PNG")->required()->check(CLI::ExistingFile);
  infer->add_option("--manifest", manifest_path, "Style manifest")->required();
  infer->add_option("--avat", infer_opts.avat_id, "Stage-one adapter id");
  infer->add_option("--svat", infer_opts.svat_id, "Stage-two adapter id");
  infer->add_option("--asvat", infer_opts.asvat_id, "Single-stage adapter id (--ablation asvat)");
  infer->add_option("--seed", seed, "Sampling seed");
  infer->add_option("--samples", infer_opts.samples, "Candidates per target");
  infer->add_option("--ablation", ablation,
                    "off, none, vec, color, skeleton-only, asvat or layout-1x2");
  infer->add_option("--ref-exemplar", infer_opts.ref_exemplar, "Exemplar for the top row");
  infer->add_option("--name", infer_opts.run_name, "Run directory name");
  infer->add_option("-o,--out", out, "Output directory")->required();
  params.add(infer);
  backend_flags.add(infer);

  // mix
  auto* mix = app.add_subcommand("mix", "Cross avat and svat adapters of different styles");
  std::vector<std::string> mix_avats, mix_svats;
  std::optional<std::string> mix_ref;
  mix->add_option("target", target, "Target PNG")->required()->check(CLI::ExistingFile);
  mix->add_option("--manifest", manifest_path, "Default style manifest");
  mix->add_option("--avat", mix_avats, "avat id, optionally id@manifest.json")->required();
  mix->add_option("--svat", mix_svats, "svat id, optionally id@manifest.json")->required();
  mix->add_option("--seed", seed, "Sampling seed");
  mix->add_option("--ref-exemplar", mix_ref, "Exemplar for the top rows");
  mix->add_option("-o,--out", out, "Output directory")->required();
  params.add(mix);
  backend_flags.add(mix);

  // eval
  auto* eval = app.add_subcommand("eval", "Structural comparison of binary masks");
  std::vector<std::string> eval_files;
  eval->add_option("pairs", eval_files, "a.png b.png [c.png d.png ...]")
      ->required()
      ->check(CLI::ExistingFile);

  // serve-mock
  auto* serve = app.add_subcommand("serve-mock", "Serve the mock backend over HTTP");
  std::string host = "127.0.0.1";
  int port = 8765;
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port (0 picks one)");
  backend_flags.add_mock(serve);

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Write protocol fixtures and synthetic scenes");
  int scene_size = 1024;
  fixtures->add_option("-o,--out", out, "Output directory")->required();
  fixtures->add_option("--scene-size", scene_size, "Side of the synthetic scenes");

  std::vector<std::string> args(argv, argv + argc);
  args = merge_config(app, std::move(args));
  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*backbone || *proxy) {
    ais::analogy::PipelineParams p;
    if (!manifest_path.empty()) p = ais::analogy::load_manifest(manifest_path).params;
    params.apply(p);
    ais::WriteResult r;
    if (*backbone) {
      r = orch::cmd_backbone(input, out, p.backbone);
    } else {
      r = orch::cmd_proxy(input, out, p.proxy,
                          ais::representations::parse_proxy_ablation(proxy_mode));
    }
    std::cerr << out << (r == ais::WriteResult::written ? " written" : " unchanged") << "\n";
    return 0;
  }

  if (*trainset || *train) {
    const auto style = load_style(manifest_path, params);
    orch::TrainsetOptions opts;
    opts.kind = ais::analogy::parse_sample_kind(kind);
    if (pairing) opts.mode = ais::analogy::parse_pairing_mode(*pairing);
    opts.cap = cap;
    opts.proxy_mode = ais::representations::parse_proxy_ablation(train_proxy);
    opts.skeleton_only = style.params.backbone.skeleton_only;
    if (*trainset) {
      const auto summary = orch::cmd_trainset(style, opts, out);
      print_json({{"samples", summary.files.size() / 2},
                  {"written", summary.written},
                  {"unchanged", summary.unchanged}});
      return 0;
    }
    auto be = backend_flags.make();
    const auto ref = orch::cmd_train(*be, style, opts, config);
    print_json({{"adapter_id", ref.id},
                {"kind", to_string(ref.kind)},
                {"status", to_string(ref.status)},
                {"rank", ref.config.rank},
                {"steps", ref.config.steps}});
    return 0;
  }

  if (*infer) {
    auto style = load_style(manifest_path, params);
    infer_opts.seed = seed;
    infer_opts.ablation = orch::parse_infer_ablation(ablation);
    infer_opts.out_dir = out;
    if (!infer_opts.avat_id) infer_opts.avat_id = style.adapters.avat;
    if (!infer_opts.svat_id) infer_opts.svat_id = style.adapters.svat;
    if (!infer_opts.asvat_id) infer_opts.asvat_id = style.adapters.asvat;
    auto be = backend_flags.make();
    if (backend_flags.is_mock()) {
      // The in-process mock forgets adapters between runs; train what is missing.
      auto ensure = [&](std::optional<std::string>& id, ais::analogy::SampleKind k) {
        if (id) return;
        orch::TrainsetOptions t;
        t.kind = k;
        if (infer_opts.ablation == orch::InferAblation::color) {
          t.proxy_mode = ais::representations::ProxyAblation::color;
        }
        t.skeleton_only = infer_opts.ablation == orch::InferAblation::skeleton_only;
        id = orch::cmd_train(*be, style, t).id;
        std::cerr << "trained mock " << ais::analogy::to_string(k) << " adapter " << *id << "\n";
      };
      using K = ais::analogy::SampleKind;
      switch (infer_opts.ablation) {
        case orch::InferAblation::asvat: ensure(infer_opts.asvat_id, K::asvat); break;
        case orch::InferAblation::none:
        case orch::InferAblation::vec:
        case orch::InferAblation::color: ensure(infer_opts.svat_id, K::svat); break;
        case orch::InferAblation::layout_1x2:
          ensure(infer_opts.avat_id, K::avat);
          ensure(infer_opts.svat_id, K::layout_1x2);
          break;
        default:
          ensure(infer_opts.avat_id, K::avat);
          ensure(infer_opts.svat_id, K::svat);
      }
    }
    const auto result = orch::cmd_infer(*be, style, target, infer_opts);
    std::cout << (result.run_dir / "output.png").string() << "\n";
    return 0;
  }

  if (*mix) {
    std::map<std::string, ais::analogy::StyleManifest> styles;
    auto style_for = [&](const std::string& path) -> const ais::analogy::StyleManifest* {
      auto it = styles.find(path);
      if (it == styles.end()) it = styles.emplace(path, load_style(path, params)).first;
      return &it->second;
    };
    std::vector<orch::StyledAdapter> avats, svats;
    for (const auto& s : mix_avats) {
      const auto [id, path] = split_adapter(s, manifest_path);
      avats.push_back({style_for(path), id});
    }
    for (const auto& s : mix_svats) {
      const auto [id, path] = split_adapter(s, manifest_path);
      svats.push_back({style_for(path), id});
    }
    auto be = backend_flags.make();
    for (const auto& o : orch::cmd_mix(*be, target, avats, svats, seed, out, mix_ref)) {
      std::cout << o.path.string() << "\n";
    }
    return 0;
  }

  if (*eval) {
    if (eval_files.size() % 2 != 0) throw ais::InvalidInput("eval takes pairs of PNG files");
    json report = json::array();
    for (std::size_t i = 0; i < eval_files.size(); i += 2) {
      const auto a = ais::imaging::BinaryImage::from_raster(ais::imaging::read_png(eval_files[i]));
      const auto b =
          ais::imaging::BinaryImage::from_raster(ais::imaging::read_png(eval_files[i + 1]));
      const auto r = orch::eval_structural(a, b);
      report.push_back({{"a", eval_files[i]},
                        {"b", eval_files[i + 1]},
                        {"backbone_iou", r.backbone_iou},
                        {"component_delta", r.component_delta},
                        {"fg_ratio_delta", r.fg_ratio_delta}});
    }
    print_json(report);
    return 0;
  }

  if (*serve) {
    ais::backend::MockBackend mock(backend_flags.mock_options());
    ais::backend::BackendServer server(mock);
    std::cerr << "serving mock backend on http://" << host << ":" << port << "\n";
    server.listen_blocking(host, port);
    return 0;
  }

  if (*fixtures) {
    const fs::path dir = out;
    std::size_t n = orch::write_protocol_fixtures(dir / "protocol").size();
    for (const auto& scene : orch::synthetic_scenes(scene_size)) {
      ais::imaging::write_png(dir / "scenes" / (scene.name + ".png"), scene.image);
      ++n;
    }
    std::cerr << n << " fixture files in " << dir.string() << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ais::Error& e) {
    std::cerr << "ais: error: " << e.what() << "\n";
    return ais::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ais: error: " << e.what() << "\n";
    return 2;
  }
}
