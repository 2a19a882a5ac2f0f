#pragma once

#include <atomic>
#include <memory>
#include <string>
#include <thread>

#include "ais/backend/protocol.hpp"

namespace httplib {
class Server;
}

namespace ais::backend {

/// Serves any Backend over the wire protocol on a background thread.
/// PermanentError and InvalidInput map to 400 (404 for unknown adapters),
/// anything else to 500.
class BackendServer {
 public:
  explicit BackendServer(Backend& backend);
  ~BackendServer();
  BackendServer(const BackendServer&) = delete;
  BackendServer& operator=(const BackendServer&) = delete;

  /// Binds `host:port` (0 picks a free port) and starts serving.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  /// Blocks serving on the calling thread.
  void listen_blocking(const std::string& host, int port);
  void stop();

  int port() const noexcept { return port_; }
  std::string url() const;

  /// The next `n` requests fail with 503 (retry tests).
  void fail_next(int n) { fail_next_ = n; }
  int requests_served() const noexcept { return requests_; }

 private:
  void install_routes();

  Backend& backend_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::string host_ = "127.0.0.1";
  int port_ = 0;
  std::atomic<int> fail_next_{0};
  std::atomic<int> requests_{0};
};

}  // namespace ais::backend
