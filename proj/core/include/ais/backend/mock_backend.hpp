#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "ais/backend/protocol.hpp"
#include "ais/backend/registry.hpp"

namespace ais::backend {

/// Stand-in "analogies" whose expected B' the imaging module can compute.
struct MockTransform {
  enum class Op { identity, invert, threshold, erode };
  Op op = Op::identity;
  int k = 0;  // erode radius

  /// "identity", "invert", "threshold", "erode-<k>" (also "erode:<k>").
  static MockTransform parse(std::string_view text);
  std::string name() const;

  /// Applies the transform to one panel. threshold maps Rec. 601 luma < 128
  /// to 0 and the rest to 255; erode treats luma < 128 as foreground, erodes
  /// it by a disk of radius k and renders foreground black on white. Output
  /// keeps the input's pixel format.
  RasterImage apply(const RasterImage& panel) const;
};

struct MockOptions {
  MockTransform avat;
  MockTransform svat;
  MockTransform asvat;
  std::optional<std::filesystem::path> registry_path;
};

/// In-process backend. Training is instant and content-addressed
/// (id "mock-{kind}-{hash}"); each adapter records the transform configured
/// for its kind at training time, and inpainting writes that transform of the
/// source panel (bottom-left, or left for 1x2 grids) into the masked panel.
/// A pure function of (job, seed).
class MockBackend final : public Backend {
 public:
  explicit MockBackend(MockOptions options = {});

  Health health() override;
  AdapterRef submit_train(const TrainJob& job) override;
  AdapterRef get_adapter(std::string_view id) override;
  InpaintResult submit_inpaint(const InpaintJob& job) override;

  /// Registers an adapter by hand with an explicit transform.
  AdapterRef register_adapter(std::string id, AdapterKind kind, MockTransform transform);

  /// Changes the transform recorded for future training of `kind`.
  void set_transform(AdapterKind kind, MockTransform transform);

 private:
  MockTransform transform_for(AdapterKind kind) const;

  mutable std::mutex options_mutex_;
  MockOptions options_;
  AdapterRegistry registry_;
};

/// Content hash used for mock adapter ids (first 16 hex digits of SHA-256).
std::string train_job_hash(const TrainJob& job);

}  // namespace ais::backend
