#include "ais/backend/codec.hpp"

#include <nlohmann/json.hpp>

#include "ais/common/error.hpp"
#include "ais/common/hash.hpp"
#include "ais/imaging/png_io.hpp"

namespace ais::backend::wire {

using nlohmann::json;

namespace {

json parse(std::string_view body, std::string_view what) {
  try {
    json j = json::parse(body);
    if (!j.is_object()) throw PermanentError(std::string(what) + ": expected a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw PermanentError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, std::string_view what) {
  if (!j.contains(key)) throw PermanentError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw PermanentError(std::string(what) + ": field '" + key + "' has the wrong type");
  }
}

std::string image_b64(const RasterImage& img) { return base64_encode(imaging::encode_png(img)); }

RasterImage image_from_b64(const std::string& b64, std::string_view what) {
  try {
    return imaging::decode_png(base64_decode(b64));
  } catch (const InvalidInput& e) {
    throw PermanentError(std::string(what) + ": " + e.what());
  }
}

std::string_view layout_name(analogy::Layout layout) {
  return layout == analogy::Layout::grid_2x2 ? "2x2" : "1x2";
}

analogy::Layout parse_layout(std::string_view text) {
  if (text == "2x2") return analogy::Layout::grid_2x2;
  if (text == "1x2") return analogy::Layout::row_1x2;
  throw PermanentError("unknown layout '" + std::string(text) + "'");
}

template <typename E, typename Parse>
E parse_enum(const json& j, const char* key, std::string_view what, Parse parse) {
  const auto text = field<std::string>(j, key, what);
  try {
    return parse(text);
  } catch (const InvalidInput& e) {
    throw PermanentError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string encode_mask_png(const BinaryImage& mask) {
  RasterImage gray(mask.width(), mask.height(), imaging::PixelFormat::gray8);
  for (std::size_t i = 0; i < mask.pixel_count(); ++i) {
    gray.samples()[i] = mask.at_index(i) ? 255 : 0;
  }
  return image_b64(gray);
}

BinaryImage decode_mask_png(std::string_view b64) {
  const RasterImage gray = imaging::to_grayscale(image_from_b64(std::string(b64), "mask"));
  BinaryImage mask(gray.width(), gray.height());
  for (std::size_t i = 0; i < mask.pixel_count(); ++i) {
    if (gray.samples()[i] >= 128) mask.set_index(i);
  }
  return mask;
}

std::string encode_train_request(const TrainJob& job) {
  json j;
  j["kind"] = to_string(job.kind);
  j["rank"] = job.config.rank;
  j["steps"] = job.config.steps;
  j["samples"] = json::array();
  for (const auto& s : job.samples) {
    j["samples"].push_back({{"image_png_b64", image_b64(s.image)}, {"prompt", s.prompt}});
  }
  return j.dump();
}

TrainJob decode_train_request(std::string_view body) {
  constexpr std::string_view what = "train request";
  const json j = parse(body, what);
  TrainJob job;
  job.kind = parse_enum<AdapterKind>(j, "kind", what, parse_adapter_kind);
  if (j.contains("rank")) job.config.rank = field<int>(j, "rank", what);
  if (j.contains("steps")) job.config.steps = field<int>(j, "steps", what);
  const auto samples = field<json>(j, "samples", what);
  if (!samples.is_array()) throw PermanentError("train request: 'samples' must be an array");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string where = "train sample " + std::to_string(i);
    job.samples.push_back({image_from_b64(field<std::string>(samples[i], "image_png_b64", where), where),
                           field<std::string>(samples[i], "prompt", where)});
  }
  return job;
}

std::string encode_adapter(const AdapterRef& ref) {
  json j;
  j["adapter_id"] = ref.id;
  j["kind"] = to_string(ref.kind);
  j["rank"] = ref.config.rank;
  j["steps"] = ref.config.steps;
  j["status"] = to_string(ref.status);
  j["created_at"] = ref.created_at;
  return j.dump();
}

AdapterRef decode_adapter(std::string_view body) {
  constexpr std::string_view what = "adapter";
  const json j = parse(body, what);
  AdapterRef ref;
  ref.id = field<std::string>(j, "adapter_id", what);
  ref.kind = parse_enum<AdapterKind>(j, "kind", what, parse_adapter_kind);
  ref.config.rank = field<int>(j, "rank", what);
  ref.config.steps = field<int>(j, "steps", what);
  ref.status = parse_enum<AdapterStatus>(j, "status", what, parse_adapter_status);
  if (j.contains("created_at")) ref.created_at = field<std::string>(j, "created_at", what);
  return ref;
}

std::string encode_inpaint_request(const InpaintJob& job) {
  json j;
  j["grid_png_b64"] = image_b64(job.grid.canvas);
  j["mask_png_b64"] = encode_mask_png(job.mask);
  j["prompt"] = job.prompt;
  j["adapter_id"] = job.adapter_id;
  j["seed"] = job.seed;
  j["samples"] = job.samples;
  j["layout"] = layout_name(job.grid.layout);
  j["job_id"] = job.job_id;
  return j.dump();
}

InpaintJob decode_inpaint_request(std::string_view body) {
  constexpr std::string_view what = "inpaint request";
  const json j = parse(body, what);
  InpaintJob job;
  const auto layout = j.contains("layout")
                          ? parse_layout(field<std::string>(j, "layout", what))
                          : analogy::Layout::grid_2x2;
  try {
    job.grid = AnalogyGrid::from_canvas(
        image_from_b64(field<std::string>(j, "grid_png_b64", what), "grid"), layout, true);
  } catch (const InvalidInput& e) {
    throw PermanentError(std::string("inpaint request: ") + e.what());
  }
  job.mask = decode_mask_png(field<std::string>(j, "mask_png_b64", what));
  job.prompt = field<std::string>(j, "prompt", what);
  job.adapter_id = field<std::string>(j, "adapter_id", what);
  job.seed = field<std::uint64_t>(j, "seed", what);
  job.samples = j.contains("samples") ? field<int>(j, "samples", what) : 1;
  if (j.contains("job_id")) job.job_id = field<std::string>(j, "job_id", what);
  return job;
}

std::string encode_inpaint_response(const InpaintResult& result, std::string_view adapter_id) {
  json j;
  j["images_png_b64"] = json::array();
  for (const auto& img : result.images) j["images_png_b64"].push_back(image_b64(img));
  j["seed"] = result.seed;
  j["adapter_id"] = adapter_id;
  j["job_id"] = result.job_id;
  return j.dump();
}

InpaintResult decode_inpaint_response(std::string_view body) {
  constexpr std::string_view what = "inpaint response";
  const json j = parse(body, what);
  InpaintResult r;
  for (const auto& b64 : field<std::vector<std::string>>(j, "images_png_b64", what)) {
    r.images.push_back(image_from_b64(b64, what));
  }
  r.seed = field<std::uint64_t>(j, "seed", what);
  if (j.contains("job_id")) r.job_id = field<std::string>(j, "job_id", what);
  return r;
}

std::string encode_health(const Health& h) {
  return json{{"ok", h.ok}, {"version", h.version}, {"capabilities", h.capabilities}}.dump();
}

Health decode_health(std::string_view body) {
  constexpr std::string_view what = "health";
  const json j = parse(body, what);
  Health h;
  h.ok = field<bool>(j, "ok", what);
  h.version = field<std::string>(j, "version", what);
  if (j.contains("capabilities")) {
    h.capabilities = field<std::vector<std::string>>(j, "capabilities", what);
  }
  return h;
}

std::string encode_error(std::string_view message) {
  return json{{"error", message}}.dump();
}

std::string decode_error(std::string_view body) {
  try {
    const json j = json::parse(body);
    if (j.is_object() && j.contains("error") && j["error"].is_string()) {
      return j["error"].get<std::string>();
    }
  } catch (const json::exception&) {
  }
  return std::string(body);
}

}  // namespace ais::backend::wire
