#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ais/analogy/grid.hpp"

namespace ais::backend {

using analogy::AnalogyGrid;
using imaging::BinaryImage;
using imaging::RasterImage;

inline constexpr std::string_view kProtocolVersion = "1";

enum class AdapterKind { avat, svat, asvat };
std::string_view to_string(AdapterKind kind);
AdapterKind parse_adapter_kind(std::string_view text);

enum class AdapterStatus { pending, ready, failed };
std::string_view to_string(AdapterStatus status);
AdapterStatus parse_adapter_status(std::string_view text);

/// Low-rank adapter hyperparameters.
struct AdapterConfig {
  int rank = 16;
  int steps = 1000;
  friend bool operator==(const AdapterConfig&, const AdapterConfig&) = default;
};

struct AdapterRef {
  std::string id;
  AdapterKind kind = AdapterKind::avat;
  AdapterConfig config;
  AdapterStatus status = AdapterStatus::pending;
  std::string created_at;
};

struct TrainSample {
  RasterImage image;
  std::string prompt;
};

struct TrainJob {
  std::vector<TrainSample> samples;
  AdapterKind kind = AdapterKind::avat;
  AdapterConfig config;
};

struct InpaintJob {
  AnalogyGrid grid;  // masked
  BinaryImage mask;  // foreground = pixels to generate
  std::string prompt;
  std::string adapter_id;
  std::uint64_t seed = 0;
  int samples = 1;
  std::string job_id;
};

struct InpaintResult {
  std::vector<RasterImage> images;  // full canvases, one per sample
  std::uint64_t seed = 0;
  std::string job_id;
};

struct Health {
  bool ok = false;
  std::string version;
  std::vector<std::string> capabilities;
};

/// Training and masked-inpainting service. Implementations must be callable
/// from several threads at once.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual Health health() = 0;
  /// Returns the adapter; its status moves pending -> ready|failed once.
  virtual AdapterRef submit_train(const TrainJob& job) = 0;
  virtual AdapterRef get_adapter(std::string_view id) = 0;
  virtual InpaintResult submit_inpaint(const InpaintJob& job) = 0;
};

/// Throws PermanentError("... sample i ...") on an empty job, empty sample
/// or canvases of differing size.
void validate(const TrainJob& job);

/// Throws PermanentError unless the grid is masked, the mask is exactly the
/// grid's masked panel and samples >= 1.
void validate(const InpaintJob& job);

/// Throws PermanentError if `result` changed any pixel outside the mask or
/// returned a canvas of the wrong geometry.
void check_unmasked_preserved(const InpaintJob& job, const RasterImage& result);

/// validate -> submit -> check every returned canvas.
InpaintResult inpaint_checked(Backend& backend, const InpaintJob& job);

/// Throws TransportError when the backend is down and PermanentError when it
/// speaks another protocol version.
Health require_compatible(Backend& backend);

}  // namespace ais::backend
