#pragma once

#include <chrono>
#include <string>

#include "ais/backend/protocol.hpp"

namespace ais::backend {

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds base_delay{200};  // doubled after each failure
  std::chrono::seconds timeout{600};
};

/// Wire-protocol client. Connection failures and 5xx responses are retried
/// with exponential backoff and end in TransportError; 4xx responses and
/// undecodable bodies raise PermanentError immediately.
class HttpBackend final : public Backend {
 public:
  /// `url` is "http://host:port" with an optional trailing path prefix.
  explicit HttpBackend(std::string url, RetryPolicy policy = {});

  Health health() override;
  AdapterRef submit_train(const TrainJob& job) override;
  AdapterRef get_adapter(std::string_view id) override;
  InpaintResult submit_inpaint(const InpaintJob& job) override;

  const std::string& url() const noexcept { return url_; }

 private:
  std::string request(const std::string& method, const std::string& path,
                      const std::string& body);

  std::string origin_;
  std::string prefix_;
  std::string url_;
  RetryPolicy policy_;
};

}  // namespace ais::backend
