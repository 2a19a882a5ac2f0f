#include "ais/backend/protocol.hpp"

#include <string>

#include "ais/common/error.hpp"

namespace ais::backend {

std::string_view to_string(AdapterKind kind) {
  switch (kind) {
    case AdapterKind::avat: return "avat";
    case AdapterKind::svat: return "svat";
    case AdapterKind::asvat: return "asvat";
  }
  return "?";
}

AdapterKind parse_adapter_kind(std::string_view text) {
  if (text == "avat") return AdapterKind::avat;
  if (text == "svat") return AdapterKind::svat;
  if (text == "asvat") return AdapterKind::asvat;
  throw InvalidInput("unknown adapter kind '" + std::string(text) + "'");
}

std::string_view to_string(AdapterStatus status) {
  switch (status) {
    case AdapterStatus::pending: return "pending";
    case AdapterStatus::ready: return "ready";
    case AdapterStatus::failed: return "failed";
  }
  return "?";
}

AdapterStatus parse_adapter_status(std::string_view text) {
  if (text == "pending") return AdapterStatus::pending;
  if (text == "ready") return AdapterStatus::ready;
  if (text == "failed") return AdapterStatus::failed;
  throw InvalidInput("unknown adapter status '" + std::string(text) + "'");
}

void validate(const TrainJob& job) {
  if (job.samples.empty()) throw PermanentError("train job has no samples");
  if (job.config.rank < 1 || job.config.steps < 1) {
    throw PermanentError("train job rank and steps must be positive");
  }
  const auto& first = job.samples.front().image;
  for (std::size_t i = 0; i < job.samples.size(); ++i) {
    const auto& img = job.samples[i].image;
    if (img.empty()) throw PermanentError("train sample " + std::to_string(i) + " is empty");
    if (img.width() != first.width() || img.height() != first.height()) {
      throw PermanentError("train sample " + std::to_string(i) + " is " +
                           std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                           ", expected " + std::to_string(first.width()) + "x" +
                           std::to_string(first.height()));
    }
  }
}

void validate(const InpaintJob& job) {
  if (job.samples < 1) throw PermanentError("inpaint job must request at least one sample");
  if (!job.grid.masked) throw PermanentError("inpaint job grid has no masked panel");
  if (job.adapter_id.empty()) throw PermanentError("inpaint job names no adapter");
  if (!(job.mask == analogy::inference_mask(job.grid))) {
    throw PermanentError("inpaint mask does not match the grid's masked panel");
  }
}

void check_unmasked_preserved(const InpaintJob& job, const RasterImage& result) {
  const RasterImage& input = job.grid.canvas;
  if (result.width() != input.width() || result.height() != input.height() ||
      result.format() != input.format()) {
    throw PermanentError("backend returned a canvas of the wrong geometry or format");
  }
  const int c = input.channels();
  for (int y = 0; y < input.height(); ++y) {
    for (int x = 0; x < input.width(); ++x) {
      if (job.mask.get(x, y)) continue;
      for (int k = 0; k < c; ++k) {
        if (input.at(x, y, k) != result.at(x, y, k)) {
          throw PermanentError("backend response altered unmasked pixel (" + std::to_string(x) +
                               ", " + std::to_string(y) + ")");
        }
      }
    }
  }
}

InpaintResult inpaint_checked(Backend& backend, const InpaintJob& job) {
  validate(job);
  InpaintResult result = backend.submit_inpaint(job);
  if (result.images.size() != static_cast<std::size_t>(job.samples)) {
    throw PermanentError("backend returned " + std::to_string(result.images.size()) +
                         " images, expected " + std::to_string(job.samples));
  }
  for (const auto& img : result.images) check_unmasked_preserved(job, img);
  return result;
}

Health require_compatible(Backend& backend) {
  Health h = backend.health();
  if (!h.ok) throw TransportError("backend reports not ok");
  if (h.version != kProtocolVersion) {
    throw PermanentError("backend speaks protocol version '" + h.version + "', expected '" +
                         std::string(kProtocolVersion) + "'");
  }
  return h;
}

}  // namespace ais::backend
