#include "ais/backend/mock_server.hpp"

#include <httplib.h>

#include "ais/backend/codec.hpp"
#include "ais/common/error.hpp"

namespace ais::backend {

BackendServer::BackendServer(Backend& backend)
    : backend_(backend), server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

BackendServer::~BackendServer() { stop(); }

void BackendServer::install_routes() {
  auto guarded = [this](auto handler, int not_found_status = 400) {
    return [this, handler, not_found_status](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      if (fail_next_ > 0) {
        --fail_next_;
        res.status = 503;
        res.set_content(wire::encode_error("injected failure"), "application/json");
        return;
      }
      try {
        res.set_content(handler(req), "application/json");
      } catch (const PermanentError& e) {
        const std::string msg = e.what();
        res.status = msg.starts_with("unknown adapter") ? not_found_status : 400;
        res.set_content(wire::encode_error(msg), "application/json");
      } catch (const InvalidInput& e) {
        res.status = 400;
        res.set_content(wire::encode_error(e.what()), "application/json");
      } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(wire::encode_error(e.what()), "application/json");
      }
    };
  };

  server_->Get("/v1/health", guarded([this](const httplib::Request&) {
    return wire::encode_health(backend_.health());
  }));
  server_->Post("/v1/train", guarded([this](const httplib::Request& req) {
    return wire::encode_adapter(backend_.submit_train(wire::decode_train_request(req.body)));
  }));
  server_->Get(R"(/v1/adapters/(.+))", guarded(
                                           [this](const httplib::Request& req) {
                                             return wire::encode_adapter(
                                                 backend_.get_adapter(req.matches[1].str()));
                                           },
                                           404));
  server_->Post("/v1/inpaint", guarded([this](const httplib::Request& req) {
    const InpaintJob job = wire::decode_inpaint_request(req.body);
    return wire::encode_inpaint_response(backend_.submit_inpaint(job), job.adapter_id);
  }));
}

int BackendServer::start(const std::string& host, int port) {
  host_ = host;
  if (port == 0) {
    port_ = server_->bind_to_any_port(host);
  } else {
    port_ = server_->bind_to_port(host, port) ? port : -1;
  }
  if (port_ < 0) throw TransportError("cannot bind " + host + ":" + std::to_string(port));
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void BackendServer::listen_blocking(const std::string& host, int port) {
  host_ = host;
  port_ = port;
  if (!server_->listen(host, port)) {
    throw TransportError("cannot listen on " + host + ":" + std::to_string(port));
  }
}

void BackendServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string BackendServer::url() const { return "http://" + host_ + ":" + std::to_string(port_); }

}  // namespace ais::backend
