#include "ais/backend/http_backend.hpp"

#include <httplib.h>

#include <thread>

#include "ais/backend/codec.hpp"
#include "ais/common/error.hpp"

namespace ais::backend {

namespace {

bool is_unreserved(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '-' || c == '_' || c == '.' || c == '~';
}

std::string percent_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (const char c : s) {
    if (is_unreserved(c)) {
      out += c;
    } else {
      const auto u = static_cast<unsigned char>(c);
      out += '%';
      out += kHex[u >> 4];
      out += kHex[u & 15];
    }
  }
  return out;
}

}  // namespace

HttpBackend::HttpBackend(std::string url, RetryPolicy policy)
    : url_(std::move(url)), policy_(policy) {
  while (!url_.empty() && url_.back() == '/') url_.pop_back();
  const auto scheme = url_.find("://");
  if (scheme == std::string::npos || url_.substr(0, scheme) != "http") {
    throw InvalidInput("backend url must look like http://host:port, got '" + url_ + "'");
  }
  const auto slash = url_.find('/', scheme + 3);
  origin_ = url_.substr(0, slash);
  prefix_ = slash == std::string::npos ? "" : url_.substr(slash);
  if (policy_.attempts < 1) throw InvalidInput("retry attempts must be >= 1");
}

std::string HttpBackend::request(const std::string& method, const std::string& path,
                                 const std::string& body) {
  httplib::Client client(origin_);
  client.set_connection_timeout(std::chrono::seconds(10));
  client.set_read_timeout(policy_.timeout);
  client.set_write_timeout(policy_.timeout);

  const std::string full = prefix_ + path;
  std::string last_error;
  auto delay = policy_.base_delay;
  for (int attempt = 1; attempt <= policy_.attempts; ++attempt) {
    auto res = method == "GET" ? client.Get(full) : client.Post(full, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
    } else if (res->status >= 200 && res->status < 300) {
      return res->body;
    } else if (res->status >= 400 && res->status < 500) {
      throw PermanentError(method + " " + path + " rejected (" + std::to_string(res->status) +
                           "): " + wire::decode_error(res->body));
    } else {
      last_error = "HTTP " + std::to_string(res->status) + ": " + wire::decode_error(res->body);
    }
    if (attempt < policy_.attempts) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
  }
  throw TransportError(method + " " + url_ + path + " failed after " +
                       std::to_string(policy_.attempts) + " attempts: " + last_error);
}

Health HttpBackend::health() { return wire::decode_health(request("GET", "/v1/health", "")); }

AdapterRef HttpBackend::submit_train(const TrainJob& job) {
  validate(job);
  return wire::decode_adapter(request("POST", "/v1/train", wire::encode_train_request(job)));
}

AdapterRef HttpBackend::get_adapter(std::string_view id) {
  return wire::decode_adapter(request("GET", "/v1/adapters/" + percent_encode(id), ""));
}

InpaintResult HttpBackend::submit_inpaint(const InpaintJob& job) {
  validate(job);
  InpaintResult result =
      wire::decode_inpaint_response(request("POST", "/v1/inpaint", wire::encode_inpaint_request(job)));
  if (!job.job_id.empty() && result.job_id != job.job_id) {
    throw PermanentError("inpaint response for job '" + result.job_id + "' does not match '" +
                         job.job_id + "'");
  }
  return result;
}

}  // namespace ais::backend
