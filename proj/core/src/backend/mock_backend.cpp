#include "ais/backend/mock_backend.hpp"

#include <charconv>

#include "ais/common/error.hpp"
#include "ais/common/hash.hpp"
#include "ais/imaging/morphology.hpp"
#include "ais/imaging/resample.hpp"
#include "ais/representations/representations.hpp"

namespace ais::backend {

MockTransform MockTransform::parse(std::string_view text) {
  if (text == "identity") return {Op::identity, 0};
  if (text == "invert") return {Op::invert, 0};
  if (text == "threshold") return {Op::threshold, 0};
  if (text.starts_with("erode-") || text.starts_with("erode:")) {
    int k = -1;
    const auto digits = text.substr(6);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 0) {
      return {Op::erode, k};
    }
  }
  throw InvalidInput("unknown mock transform '" + std::string(text) +
                     "' (expected identity, invert, threshold or erode-<k>)");
}

std::string MockTransform::name() const {
  switch (op) {
    case Op::identity: return "identity";
    case Op::invert: return "invert";
    case Op::threshold: return "threshold";
    case Op::erode: return "erode-" + std::to_string(k);
  }
  return "?";
}

RasterImage MockTransform::apply(const RasterImage& panel) const {
  switch (op) {
    case Op::identity:
      return panel;
    case Op::invert:
      return imaging::invert(panel);
    case Op::threshold:
    case Op::erode: {
      imaging::BinaryImage fg = imaging::BinaryImage::from_raster(panel, 128);
      if (op == Op::erode) fg = imaging::erode(fg, imaging::StructuringDisk(k));
      RasterImage out(panel.width(), panel.height(), panel.format());
      for (int y = 0; y < panel.height(); ++y) {
        for (int x = 0; x < panel.width(); ++x) {
          const std::uint8_t v = fg.get(x, y) ? 0 : 255;
          out.set_rgb(x, y, {v, v, v});
        }
      }
      return out;
    }
  }
  return panel;
}

MockBackend::MockBackend(MockOptions options)
    : options_(std::move(options)),
      registry_(options_.registry_path ? AdapterRegistry(*options_.registry_path)
                                       : AdapterRegistry()) {}

Health MockBackend::health() {
  return {true, std::string(kProtocolVersion), {"train", "inpaint"}};
}

std::string train_job_hash(const TrainJob& job) {
  Sha256 h;
  h.update(to_string(job.kind));
  h.update("|" + std::to_string(job.config.rank) + "|" + std::to_string(job.config.steps));
  for (const auto& s : job.samples) {
    h.update("|" + representations::image_sha256(s.image) + "|");
    h.update(s.prompt);
  }
  return h.hex().substr(0, 16);
}

MockTransform MockBackend::transform_for(AdapterKind kind) const {
  std::lock_guard lock(options_mutex_);
  switch (kind) {
    case AdapterKind::avat: return options_.avat;
    case AdapterKind::svat: return options_.svat;
    case AdapterKind::asvat: return options_.asvat;
  }
  return {};
}

void MockBackend::set_transform(AdapterKind kind, MockTransform transform) {
  std::lock_guard lock(options_mutex_);
  switch (kind) {
    case AdapterKind::avat: options_.avat = transform; break;
    case AdapterKind::svat: options_.svat = transform; break;
    case AdapterKind::asvat: options_.asvat = transform; break;
  }
}

AdapterRef MockBackend::submit_train(const TrainJob& job) {
  validate(job);
  const std::string id = "mock-" + std::string(to_string(job.kind)) + "-" + train_job_hash(job);
  if (auto existing = registry_.find(id)) return existing->ref;

  RegistryEntry entry;
  entry.ref.id = id;
  entry.ref.kind = job.kind;
  entry.ref.config = job.config;
  entry.ref.status = AdapterStatus::ready;
  entry.ref.created_at = "1970-01-01T00:00:00Z";  // mock adapters are timeless
  entry.transform = transform_for(job.kind).name();
  registry_.put(entry);
  return entry.ref;
}

AdapterRef MockBackend::register_adapter(std::string id, AdapterKind kind,
                                         MockTransform transform) {
  RegistryEntry entry;
  entry.ref.id = std::move(id);
  entry.ref.kind = kind;
  entry.ref.status = AdapterStatus::ready;
  entry.ref.created_at = "1970-01-01T00:00:00Z";
  entry.transform = transform.name();
  registry_.put(entry);
  return entry.ref;
}

AdapterRef MockBackend::get_adapter(std::string_view id) {
  auto entry = registry_.find(id);
  if (!entry) throw PermanentError("unknown adapter '" + std::string(id) + "'");
  return entry->ref;
}

InpaintResult MockBackend::submit_inpaint(const InpaintJob& job) {
  const auto entry = registry_.find(job.adapter_id);
  if (!entry) throw PermanentError("unknown adapter '" + job.adapter_id + "'");
  if (entry->ref.status != AdapterStatus::ready) {
    throw PermanentError("adapter '" + job.adapter_id + "' is not ready");
  }
  validate(job);

  const MockTransform transform = MockTransform::parse(entry->transform);
  const auto& grid = job.grid;
  const bool row = grid.layout == analogy::Layout::row_1x2;
  const RasterImage source =
      analogy::extract_panel(grid, row ? analogy::Quadrant::top_left : analogy::Quadrant::bottom_left);
  RasterImage canvas = grid.canvas;
  imaging::paste(canvas, transform.apply(source), grid.panel_size, row ? 0 : grid.panel_size);

  InpaintResult result;
  result.seed = job.seed;
  result.job_id = job.job_id;
  result.images.assign(static_cast<std::size_t>(job.samples), canvas);
  return result;
}

}  // namespace ais::backend
